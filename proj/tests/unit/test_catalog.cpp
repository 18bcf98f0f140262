#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liekms/catalog.hpp"
#include "liekms/parse.hpp"

#include "helpers.hpp"

using namespace liekms;
using test_helpers::random_element;
using test_helpers::rep_bracket_oracle;

namespace {
Element el(const CatalogEntry& e, const std::string& expr) { return parse_element(e.algebra, expr); }

bool golden_contains(const CatalogEntry& e, const std::string& expr, bool expected) {
  Element target = parse_element(e.algebra, expr);
  for (const auto& [element, flag] : e.known_essential)
    if (element == target && flag == expected) return true;
  return false;
}
}  // namespace

TEST_CASE("dimension formulas") {
  CHECK(build_gl(2).algebra->dim() == 4);
  CHECK(build_gl(3).algebra->dim() == 9);
  CHECK(build_gl(4).algebra->dim() == 16);
  CHECK(build_sl(2).algebra->dim() == 3);
  CHECK(build_sl(3).algebra->dim() == 8);
  CHECK(build_sl(4).algebra->dim() == 15);
  CHECK(build_sp(1).algebra->dim() == 3);   // sp(2, R)
  CHECK(build_sp(2).algebra->dim() == 10);  // sp(4, R)
  CHECK(build_so(1, 2).algebra->dim() == 3);
  CHECK(build_so(1, 3).algebra->dim() == 6);
  CHECK(build_so(1, 4).algebra->dim() == 10);
  CHECK(build_so(2, 3).algebra->dim() == 10);
  CHECK(build_so(3, 0).algebra->dim() == 3);
  CHECK(build_su(2).algebra->dim() == 3);
  CHECK(build_su(3).algebra->dim() == 8);
  CHECK(build_poincare(2).algebra->dim() == 6);
  CHECK(build_poincare(3).algebra->dim() == 10);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_gl(0), std::invalid_argument);
  CHECK_THROWS_AS(build_sl(1), std::invalid_argument);
  CHECK_THROWS_AS(build_sp(0), std::invalid_argument);
  CHECK_THROWS_AS(build_so(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_su(1), std::invalid_argument);
  CHECK_THROWS_AS(build_poincare(1), std::invalid_argument);
  CHECK_THROWS_AS(build_from_spec("xx:2"), std::invalid_argument);
  CHECK_THROWS_AS(build_from_spec("so:1"), std::invalid_argument);
  CHECK_THROWS_AS(build_from_spec("gl:a"), std::invalid_argument);
  CHECK_THROWS_AS(build_from_spec("gl"), std::invalid_argument);
}

TEST_CASE("label conventions") {
  CatalogEntry so12 = build_so(1, 2);
  CHECK(so12.algebra->basis_labels() == std::vector<std::string>{"m01", "m02", "m12"});
  CatalogEntry so23 = build_so(2, 3);
  CHECK(so23.algebra->label_index("m12") == 0);  // 1-based labels for p != 1
  CHECK(so23.algebra->label_index("m45") >= 0);
  CHECK(so23.algebra->label_index("m01") < 0);
  CatalogEntry poincare2 = build_poincare(2);
  CHECK(poincare2.algebra->label_index("m01") >= 0);
  CHECK(poincare2.algebra->label_index("p0") >= 0);
  CHECK(build_su(2).algebra->basis_labels() == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("golden bracket values per family") {
  CatalogEntry gl2 = build_gl(2);
  CHECK(bracket(el(gl2, "e11"), el(gl2, "e12")) == el(gl2, "e12"));

  CatalogEntry sl3 = build_sl(3);
  CHECK(bracket(el(sl3, "f12"), el(sl3, "f21")) == el(sl3, "e1"));
  CHECK(bracket(el(sl3, "f13"), el(sl3, "f31")) == el(sl3, "e1 + e2"));

  CatalogEntry sp2 = build_sp(2);
  CHECK(bracket(el(sp2, "h11"), el(sp2, "f11")) == Rational(2) * el(sp2, "f11"));
  CHECK(bracket(el(sp2, "h11"), el(sp2, "g11")) == Rational(-2) * el(sp2, "g11"));

  CatalogEntry poincare3 = build_poincare(3);
  CHECK(bracket(el(poincare3, "p0"), el(poincare3, "p1")).is_zero());
  CHECK(bracket(el(poincare3, "m01"), el(poincare3, "p0")) == el(poincare3, "p1"));
  CHECK(bracket(el(poincare3, "m01"), el(poincare3, "p1")) == el(poincare3, "p0"));
  CHECK(bracket(el(poincare3, "m01"), el(poincare3, "p2")).is_zero());

  CatalogEntry su2 = build_su(2);
  CHECK(bracket(el(su2, "x1"), el(su2, "x2")) == Rational(2) * el(su2, "x3"));
  CHECK(bracket(el(su2, "x2"), el(su2, "x3")) == Rational(2) * el(su2, "x1"));
  CHECK(bracket(el(su2, "x3"), el(su2, "x1")) == Rational(2) * el(su2, "x2"));
}

TEST_CASE("structure constants agree with the defining representation") {
  std::mt19937_64 rng(23);
  for (const char* spec : {"gl:3", "sl:3", "sp:2", "so:1,3", "so:2,3", "su:3", "poincare:2"}) {
    CatalogEntry entry = build_from_spec(spec);
    INFO(spec);
    REQUIRE(entry.defining_rep.has_value());
    // basis pairs
    const int n = entry.algebra->dim();
    for (int i = 0; i < n; i += 2)
      for (int j = i + 1; j < n; j += 2) {
        Element x = Element::basis(entry.algebra, i), y = Element::basis(entry.algebra, j);
        CHECK(bracket(x, y) == rep_bracket_oracle(entry, x, y));
      }
    // random pairs
    for (int trial = 0; trial < 4; ++trial) {
      Element x = random_element(entry.algebra, rng);
      Element y = random_element(entry.algebra, rng);
      CHECK(bracket(x, y) == rep_bracket_oracle(entry, x, y));
    }
  }
}

TEST_CASE("golden essentiality metadata") {
  CatalogEntry gl2 = build_gl(2);
  CHECK(golden_contains(gl2, "e11", true));
  CHECK(golden_contains(gl2, "e22", true));
  CHECK(golden_contains(gl2, "e11 + e22", false));

  CHECK(golden_contains(build_sl(3), "e1", true));
  CHECK(golden_contains(build_sp(2), "h11", true));
  CHECK(golden_contains(build_so(2, 3), "m13", true));
  CHECK(golden_contains(build_poincare(3), "m01", true));

  CHECK(build_so(3, 0).no_essential_elements);
  CHECK(build_so(0, 3).no_essential_elements);
  CHECK(build_su(2).no_essential_elements);
  CHECK(build_su(3).no_essential_elements);
  CHECK_FALSE(build_so(1, 2).no_essential_elements);
  CHECK(build_so(3, 0).known_essential.empty());
}

TEST_CASE("jacobi holds across the catalog parameter sweep") {
  for (const char* spec : {"gl:4", "sl:4", "sp:2", "so:2,3", "so:1,4", "su:3", "poincare:3", "so:4,0",
                           "so:2,2", "so:0,3", "so:5,0"}) {
    CatalogEntry entry = build_from_spec(spec);
    INFO(spec);
    CHECK(verify_jacobi(*entry.algebra).ok);
  }
}
