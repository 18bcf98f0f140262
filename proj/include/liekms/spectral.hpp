#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liekms/lie_algebra.hpp"
#include "liekms/matrix.hpp"
#include "liekms/polynomial.hpp"

namespace liekms {

/// The adjoint action ad(m): y -> [m, y], as an exact matrix in the
/// algebra basis. Column j holds the coordinates of [m, b_j].
struct AdMatrix {
  Element element;
  RatMatrix matrix;

  const AlgebraPtr& algebra() const { return element.algebra(); }
  int dim() const { return element.algebra()->dim(); }
};

inline AdMatrix ad_matrix(const Element& m) {
  const AlgebraPtr& a = m.algebra();
  const int n = a->dim();
  RatMatrix mat(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> bj(n);
    bj[j] = Rational(1);
    std::vector<Rational> col = a->bracket_coords(m.coords(), bj);
    for (int i = 0; i < n; ++i) mat(i, j) = col[i];
  }
  return AdMatrix{m, std::move(mat)};
}

/// Monic characteristic polynomial det(tI - A), exact.
/// Faddeev-LeVerrier recurrence; every division is by an integer k and is
/// exact over Q.
inline Poly char_poly(const RatMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Poly::constant(Rational(1));
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  RatMatrix m = a;
  c[n - 1] = -m.trace();
  for (int k = 2; k <= n; ++k) {
    RatMatrix shifted = m;
    for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    m = a * shifted;
    c[n - k] = -(m.trace() / Rational(static_cast<long>(k)));
  }
  return Poly(std::move(c));
}

inline Poly char_poly(const AdMatrix& m) { return char_poly(m.matrix); }

struct EigenvalueData {
  Rational value;
  int alg_mult;
  int geo_mult;
};

enum class Certification { exact, numeric_assisted };

/// Exact bookkeeping of the spectrum of an adjoint matrix:
/// rational eigenvalues with both multiplicities, plus counts (with
/// multiplicity) of irrational real roots and of complex-conjugate pairs.
/// The three groups always add up to the matrix dimension.
struct AdSpectrum {
  std::vector<EigenvalueData> rational_eigenvalues;  // ascending by value
  int nonrational_real_root_count = 0;
  int complex_root_pair_count = 0;
  Certification certification = Certification::exact;

  bool fully_rational() const { return nonrational_real_root_count == 0 && complex_root_pair_count == 0; }
  bool has_irrational_real() const { return nonrational_real_root_count > 0; }
};

inline AdSpectrum ad_spectrum(const AdMatrix& m) {
  AdSpectrum out;
  Poly p = char_poly(m);
  auto roots = rational_roots(p);
  for (const auto& [value, alg_mult] : roots) {
    RatMatrix shifted = m.matrix;
    for (int i = 0; i < m.dim(); ++i) shifted(i, i) -= value;
    int geo_mult = m.dim() - static_cast<int>(rank(std::move(shifted)));
    out.rational_eigenvalues.push_back({value, alg_mult, geo_mult});
  }
  // Distribute the remaining roots using the squarefree decomposition:
  // within each squarefree factor, Sturm counts distinct real roots, and
  // degree bookkeeping yields the complex pairs.
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    int distinct_real = SturmChain(factor).count_all();
    int distinct_rational = 0;
    for (const auto& [value, alg_mult] : roots)
      if (factor.eval(value).is_zero()) ++distinct_rational;
    out.nonrational_real_root_count += mult * (distinct_real - distinct_rational);
    out.complex_root_pair_count += mult * (factor.degree() - distinct_real) / 2;
  }
  return out;
}

struct DiagonalizabilityVerdict {
  enum class Value { yes, no, unknown };
  Value value = Value::unknown;
  std::string reason;
  bool certified = false;

  bool is_yes() const { return value == Value::yes; }
};

inline const char* to_string(DiagonalizabilityVerdict::Value v) {
  switch (v) {
    case DiagonalizabilityVerdict::Value::yes: return "yes";
    case DiagonalizabilityVerdict::Value::no: return "no";
    default: return "unknown";
  }
}

/// Decides diagonalizability over R, exactly.
///
/// A is diagonalizable over C iff s(A) = 0 for the squarefree part s of
/// the characteristic polynomial (s has the same roots as the minimal
/// polynomial, so s(A) = 0 iff the minimal polynomial is squarefree).
/// Realness of the spectrum is then a Sturm count on s. Rational input
/// always certifies; "unknown" is never produced here.
inline DiagonalizabilityVerdict is_r_diagonalizable(const RatMatrix& a) {
  Poly s = squarefree_part(char_poly(a));
  const int n = static_cast<int>(a.rows());
  RatMatrix acc(n, n);  // Horner: acc = s(A)
  for (int k = s.degree(); k >= 0; --k) {
    acc = acc * a;
    for (int i = 0; i < n; ++i) acc(i, i) += s.coeff(k);
  }
  if (!acc.is_zero())
    return {DiagonalizabilityVerdict::Value::no, "minimal polynomial has a repeated factor", true};
  int real_roots = SturmChain(s).count_all();
  if (real_roots != s.degree())
    return {DiagonalizabilityVerdict::Value::no, "spectrum contains a nonreal conjugate pair", true};
  return {DiagonalizabilityVerdict::Value::yes, "squarefree minimal polynomial with all-real spectrum", true};
}

inline DiagonalizabilityVerdict is_r_diagonalizable(const AdMatrix& m) { return is_r_diagonalizable(m.matrix); }

/// Exact eigenspace ker(A - lambda I); zero-dimensional when lambda is not
/// an eigenvalue.
inline Subspace eigenspace(const AdMatrix& m, const Rational& lambda) {
  RatMatrix shifted = m.matrix;
  for (int i = 0; i < m.dim(); ++i) shifted(i, i) -= lambda;
  return Subspace(m.algebra(), row_space_basis(kernel_basis(std::move(shifted))));
}

}  // namespace liekms
