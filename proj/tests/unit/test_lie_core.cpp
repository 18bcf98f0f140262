#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liekms/catalog.hpp"
#include "liekms/lie_algebra.hpp"
#include "liekms/parse.hpp"

#include "helpers.hpp"

using namespace liekms;
using test_helpers::random_element;

namespace {
Element el(const CatalogEntry& e, const std::string& expr) { return parse_element(e.algebra, expr); }
}  // namespace

TEST_CASE("elementary gl(2) brackets") {
  CatalogEntry gl2 = build_gl(2);
  CHECK(bracket(el(gl2, "e12"), el(gl2, "e21")) == el(gl2, "e11 - e22"));
  CHECK(bracket(el(gl2, "e11"), el(gl2, "e12")) == el(gl2, "e12"));
  CHECK(bracket(el(gl2, "e11"), el(gl2, "e21")) == -el(gl2, "e21"));
}

TEST_CASE("so(1,2) brackets match the metric relations") {
  // g = diag(1, -1, -1): expanding the defining relations by hand gives
  // [m01, m02] = m12, [m01, m12] = m02, [m02, m12] = -m01.
  CatalogEntry so12 = build_so(1, 2);
  CHECK(bracket(el(so12, "m01"), el(so12, "m02")) == el(so12, "m12"));
  CHECK(bracket(el(so12, "m01"), el(so12, "m12")) == el(so12, "m02"));
  CHECK(bracket(el(so12, "m02"), el(so12, "m12")) == -el(so12, "m01"));
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  CatalogEntry sl3 = build_sl(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Element x = random_element(sl3.algebra, rng);
    Element y = random_element(sl3.algebra, rng);
    Element z = random_element(sl3.algebra, rng);
    CHECK(bracket(x, x).is_zero());
    CHECK(bracket(x, y) == -bracket(y, x));
    Rational alpha(2, 3), beta(-5, 7);
    CHECK(bracket(alpha * x + beta * y, z) == alpha * bracket(x, z) + beta * bracket(y, z));
  }
}

TEST_CASE("bracket rejects mismatched algebras") {
  CatalogEntry a = build_gl(2), b = build_gl(2);
  CHECK_THROWS_AS(bracket(Element::basis(a.algebra, 0), Element::basis(b.algebra, 0)),
                  std::invalid_argument);
}

TEST_CASE("jacobi verification") {
  for (const char* spec : {"gl:2", "sl:3", "sp:1", "so:1,2", "su:2", "poincare:2"}) {
    CatalogEntry entry = build_from_spec(spec);
    INFO(spec);
    CHECK(verify_jacobi(*entry.algebra).ok);
  }

  // abelian algebra: all brackets vanish
  LieAlgebra abelian("abelian", {"a", "b", "c"}, {});
  CHECK(verify_jacobi(abelian).ok);

  // perturbing one structure constant of gl(2) breaks the identity
  CatalogEntry gl2 = build_gl(2);
  auto brackets = gl2.algebra->brackets();
  auto it = brackets.begin();
  it->second[0].second += Rational(1);
  LieAlgebra broken("broken", gl2.algebra->basis_labels(), brackets);
  JacobiReport report = verify_jacobi(broken);
  CHECK_FALSE(report.ok);
  CHECK(report.first_violation.has_value());
}

TEST_CASE("subspace operations") {
  CatalogEntry gl2 = build_gl(2);
  const AlgebraPtr& a = gl2.algebra;

  Subspace one = span_reduce(a, {el(gl2, "e11"), Rational(2) * el(gl2, "e11")});
  CHECK(one.dim() == 1);

  Subspace two = sum(span_reduce(a, {el(gl2, "e12")}), span_reduce(a, {el(gl2, "e21")}));
  CHECK(two.dim() == 2);

  Subspace sl2_inside = span_reduce(a, {el(gl2, "e11 - e22"), el(gl2, "e12"), el(gl2, "e21")});
  CHECK_FALSE(contains(sl2_inside, el(gl2, "e11 + e22")));
  CHECK(contains(sl2_inside, el(gl2, "e12 - 3*e21")));

  // zero vectors are dropped silently
  CHECK(span_reduce(a, {Element::zero(a), el(gl2, "e11")}).dim() == 1);

  CatalogEntry other = build_gl(2);
  CHECK_THROWS_AS(contains(one, Element::basis(other.algebra, 0)), std::invalid_argument);
  CHECK_THROWS_AS(sum(one, span_reduce(other.algebra, {Element::basis(other.algebra, 0)})),
                  std::invalid_argument);
}

TEST_CASE("lie closure") {
  CatalogEntry gl2 = build_gl(2);
  Subspace closed = lie_closure(gl2.algebra, {el(gl2, "e12"), el(gl2, "e21")});
  CHECK(closed.dim() == 3);  // a copy of sl(2)
  CHECK(contains(closed, el(gl2, "e11 - e22")));
  CHECK_FALSE(contains(closed, el(gl2, "e11")));

  auto abelian = std::make_shared<LieAlgebra>("abelian", std::vector<std::string>{"a", "b"},
                                              std::map<std::pair<int, int>, LieAlgebra::SparseVec>{});
  CHECK(lie_closure(abelian, {Element::basis(abelian, 0)}).dim() == 1);

  CatalogEntry so12 = build_so(1, 2);
  CHECK(lie_closure(so12.algebra, {el(so12, "m01"), el(so12, "m02")}).dim() == 3);

  CHECK_THROWS_AS(lie_closure(gl2.algebra, {}), std::invalid_argument);
}

TEST_CASE("lie closure is bracket-closed and monotone") {
  CatalogEntry sp2 = build_sp(2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Element> seeds{random_element(sp2.algebra, rng), random_element(sp2.algebra, rng)};
    if (seeds[0].is_zero() && seeds[1].is_zero()) continue;
    Subspace closed = lie_closure(sp2.algebra, seeds);
    for (const Element& s : seeds) CHECK(contains(closed, s));
    for (const Element& x : closed.basis_elements())
      for (const Element& y : closed.basis_elements()) CHECK(contains(closed, bracket(x, y)));
    seeds.push_back(random_element(sp2.algebra, rng));
    CHECK(lie_closure(sp2.algebra, seeds).dim() >= closed.dim());
  }
}
