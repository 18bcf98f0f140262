#include <catch2/catch_amalgamated.hpp>

#include "liekms/matrix.hpp"

using liekms::LinearSolver;
using liekms::RatMatrix;
using liekms::Rational;

namespace {
RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("rref and rank") {
  RatMatrix m = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(rank(m) == 2);
  RatMatrix reduced = row_space_basis(m);
  REQUIRE(reduced.rows() == 2);
  // canonical reduced echelon: pivots are 1 with cleared columns
  CHECK(reduced(0, 0) == Rational(1));
  CHECK(reduced(0, 1) == Rational(0));
  CHECK(reduced(0, 2) == Rational(-1));
  CHECK(reduced(1, 0) == Rational(0));
  CHECK(reduced(1, 1) == Rational(1));
  CHECK(reduced(1, 2) == Rational(2));
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(RatMatrix::identity(4)) == 4);
}

TEST_CASE("kernel basis") {
  RatMatrix m = from_ints({{1, 2, 3}, {0, 1, 1}});
  RatMatrix k = kernel_basis(m);
  REQUIRE(k.rows() == 1);
  // m * k_row = 0
  std::vector<Rational> prod = m.apply(k.row(0));
  for (const auto& v : prod) CHECK(v.is_zero());
  CHECK(kernel_basis(RatMatrix::identity(3)).rows() == 0);
}

TEST_CASE("matrix product and trace") {
  RatMatrix a = from_ints({{1, 2}, {3, 4}});
  RatMatrix b = from_ints({{0, 1}, {1, 0}});
  RatMatrix ab = a * b;
  CHECK(ab(0, 0) == Rational(2));
  CHECK(ab(0, 1) == Rational(1));
  CHECK(ab(1, 0) == Rational(4));
  CHECK(ab(1, 1) == Rational(3));
  CHECK(a.trace() == Rational(5));
  CHECK((a - a).is_zero());
}

TEST_CASE("linear solver coordinates") {
  RatMatrix b = from_ints({{1, 0}, {1, 1}, {0, 2}});
  LinearSolver solver(b);
  std::vector<Rational> v{Rational(3), Rational(5), Rational(4)};  // 3*c0 + 2*c1
  std::vector<Rational> c = solver.coordinates(v);
  CHECK(c[0] == Rational(3));
  CHECK(c[1] == Rational(2));
  std::vector<Rational> outside{Rational(1), Rational(0), Rational(0)};
  CHECK_THROWS_AS(solver.coordinates(outside), std::invalid_argument);
  RatMatrix rank_deficient = from_ints({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(LinearSolver(rank_deficient), std::invalid_argument);
}
