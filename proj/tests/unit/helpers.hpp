#pragma once

#include <random>
#include <vector>

#include "liekms/catalog.hpp"
#include "liekms/lie_algebra.hpp"
#include "liekms/matrix.hpp"

namespace test_helpers {

using namespace liekms;

/// Independent bracket oracle: evaluates [x, y] in the defining
/// representation (matrix commutator) and re-coordinatizes, bypassing the
/// stored structure constants entirely.
inline Element rep_bracket_oracle(const CatalogEntry& entry, const Element& x, const Element& y) {
  REQUIRE(entry.defining_rep.has_value());
  const auto& reps = *entry.defining_rep;
  const std::size_t m = reps.front().rows();
  RatMatrix xm(m, m), ym(m, m);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (!x.coords()[k].is_zero()) xm = xm + x.coords()[k] * reps[k];
    if (!y.coords()[k].is_zero()) ym = ym + y.coords()[k] * reps[k];
  }
  RatMatrix comm = xm * ym - ym * xm;
  RatMatrix basis_cols(m * m, reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) basis_cols(i * m + j, k) = reps[k](i, j);
  LinearSolver solver(basis_cols);
  std::vector<Rational> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = comm(i, j);
  return Element(x.algebra(), solver.coordinates(flat));
}

inline Element random_element(const AlgebraPtr& a, std::mt19937_64& rng, long max_abs = 3) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rational> c(a->dim());
  for (auto& v : c) v = Rational(num(rng), den(rng));
  return Element(a, std::move(c));
}

inline Element nonzero_random_element(const AlgebraPtr& a, std::mt19937_64& rng, long max_abs = 3) {
  while (true) {
    Element e = random_element(a, rng, max_abs);
    if (!e.is_zero()) return e;
  }
}

}  // namespace test_helpers
