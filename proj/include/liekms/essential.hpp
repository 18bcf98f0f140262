#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekms/errors.hpp"
#include "liekms/lie_algebra.hpp"
#include "liekms/spectral.hpp"

namespace liekms {

enum class Essentiality { essential, not_essential, unknown };

inline const char* to_string(Essentiality v) {
  switch (v) {
    case Essentiality::essential: return "essential";
    case Essentiality::not_essential: return "not_essential";
    default: return "unknown";
  }
}

/// Full evidence for an essentiality decision on an element m:
/// the diagonalizability certificate, the rational eigenspaces, the image
/// span gstar = [m, g], its bracket span, and the dimension of
/// span(m) + gstar + [gstar, gstar]. The element is essential exactly when
/// ad(m) is diagonalizable over R and that span is everything.
struct EssentialityReport {
  Essentiality verdict = Essentiality::unknown;
  DiagonalizabilityVerdict diagonalizable;
  AdSpectrum spectrum;
  std::vector<std::pair<Rational, Subspace>> eigen_decomposition;  // rational eigenvalues, ascending
  Subspace gstar;
  Subspace gstar_bracket;
  int span_sum_dim = 0;
  /// Generation-criterion cross-check: dimension of the Lie closure of
  /// {m} plus the rational nonzero-eigenvalue eigenvectors. Absent when
  /// not requested or when irrational real eigenvalues block it.
  std::optional<int> criterion_a_dim;
  std::optional<std::string> failure_reason;
};

/// Decides essentiality of m (must be nonzero).
///
/// gstar is computed as the column span of ad(m), which equals the span of
/// the nonzero-eigenvalue eigenvectors whenever ad(m) is diagonalizable,
/// and stays a well-defined subspace even before that certification.
/// Irrational real eigenvalues make exact eigenvectors unavailable, so the
/// verdict degrades to unknown in that case rather than approximating.
inline EssentialityReport is_essential(const Element& m, bool crosscheck = false) {
  if (m.is_zero()) throw std::invalid_argument("is_essential: zero element rejected");
  const AlgebraPtr& a = m.algebra();
  const int n = a->dim();

  AdMatrix ad = ad_matrix(m);
  EssentialityReport report{Essentiality::unknown,
                            is_r_diagonalizable(ad),
                            ad_spectrum(ad),
                            {},
                            Subspace::zero(a),
                            Subspace::zero(a),
                            0,
                            std::nullopt,
                            std::nullopt};

  for (const auto& ev : report.spectrum.rational_eigenvalues)
    report.eigen_decomposition.emplace_back(ev.value, eigenspace(ad, ev.value));

  // gstar = [m, g] = column span of ad(m).
  report.gstar = Subspace(a, row_space_basis(ad.matrix.transposed()));
  report.gstar_bracket = bracket_span(report.gstar, report.gstar);
  Subspace span_sum = sum(sum(span_reduce(a, {m}), report.gstar), report.gstar_bracket);
  report.span_sum_dim = span_sum.dim();

  if (!report.diagonalizable.is_yes()) {
    report.verdict = Essentiality::not_essential;
    report.failure_reason = "ad(m) is not diagonalizable over R: " + report.diagonalizable.reason;
  } else if (report.spectrum.has_irrational_real()) {
    report.verdict = Essentiality::unknown;
    report.failure_reason = "irrational spectrum: exact eigenvectors unavailable";
  } else if (report.span_sum_dim == n) {
    report.verdict = Essentiality::essential;
  } else {
    report.verdict = Essentiality::not_essential;
    report.failure_reason = "span(m) + [m,g] + [[m,g],[m,g]] has dimension " +
                            std::to_string(report.span_sum_dim) + " < " + std::to_string(n);
  }

  if (crosscheck && !report.spectrum.has_irrational_real()) {
    std::vector<Element> seeds{m};
    for (const auto& [value, space] : report.eigen_decomposition) {
      if (value.is_zero()) continue;
      for (const Element& e : space.basis_elements()) seeds.push_back(e);
    }
    report.criterion_a_dim = lie_closure(a, seeds).dim();
  }
  return report;
}

/// Gram matrix of the Killing form K(x, y) = trace(ad(x) ad(y)) with its
/// exact signature.
struct KillingReport {
  RatMatrix matrix;
  int n_pos = 0, n_neg = 0, n_zero = 0;
  bool negative_definite = false;
  bool nondegenerate = false;
};

namespace detail {

/// Signature of a symmetric rational matrix by congruence diagonalization
/// (simultaneous row and column operations over Q).
inline void symmetric_signature(RatMatrix s, int& n_pos, int& n_neg, int& n_zero) {
  const int n = static_cast<int>(s.rows());
  n_pos = n_neg = n_zero = 0;
  for (int i = 0; i < n; ++i) {
    if (s(i, i).is_zero()) {
      int pivot = -1;
      for (int j = i + 1; j < n; ++j)
        if (!s(j, j).is_zero()) { pivot = j; break; }
      if (pivot >= 0) {
        for (int k = 0; k < n; ++k) std::swap(s(i, k), s(pivot, k));
        for (int k = 0; k < n; ++k) std::swap(s(k, i), s(k, pivot));
      } else {
        int off = -1;
        for (int j = i + 1; j < n; ++j)
          if (!s(i, j).is_zero()) { off = j; break; }
        if (off < 0) { ++n_zero; continue; }
        // diagonal block is zero; row/col addition creates 2*s(i,off) != 0
        for (int k = 0; k < n; ++k) s(i, k) += s(off, k);
        for (int k = 0; k < n; ++k) s(k, i) += s(k, off);
      }
    }
    Rational d = s(i, i);
    if (d.sign() > 0) ++n_pos; else ++n_neg;
    for (int j = i + 1; j < n; ++j) {
      if (s(j, i).is_zero()) continue;
      Rational f = s(j, i) / d;
      for (int k = 0; k < n; ++k) s(j, k) -= f * s(i, k);
      for (int k = 0; k < n; ++k) s(k, j) -= f * s(k, i);
    }
  }
}

}  // namespace detail

inline KillingReport killing_report(const AlgebraPtr& a) {
  const int n = a->dim();
  std::vector<RatMatrix> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(ad_matrix(Element::basis(a, i)).matrix);
  KillingReport report{RatMatrix(n, n), 0, 0, 0, false, false};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational k = (ads[i] * ads[j]).trace();
      report.matrix(i, j) = k;
      report.matrix(j, i) = k;
    }
  detail::symmetric_signature(report.matrix, report.n_pos, report.n_neg, report.n_zero);
  report.negative_definite = (report.n_neg == n);
  report.nondegenerate = (report.n_zero == 0);
  return report;
}

/// K(m, m), plus the compactness obstruction: a negative-definite Killing
/// form rules out essential elements outright (any diagonalizable ad(m)
/// would force K(m, m) = sum of squared eigenvalues >= 0).
struct CompactnessObstruction {
  bool obstructed = false;
  Rational killing_mm;
};

inline CompactnessObstruction compactness_obstruction(const Element& m) {
  KillingReport k = killing_report(m.algebra());
  RatMatrix ad = ad_matrix(m).matrix;
  return {k.negative_definite, (ad * ad).trace()};
}

namespace detail {

/// Smallest k with ad(n)^k = 0, or -1 if ad(n) is not nilpotent.
inline int nilpotency_index(const RatMatrix& ad) {
  const int n = static_cast<int>(ad.rows());
  RatMatrix power = RatMatrix::identity(n);
  for (int k = 0; k <= n; ++k) {
    if (power.is_zero()) return k;
    power = power * ad;
  }
  return -1;
}

}  // namespace detail

/// exp(t ad(n))(m) as an exact finite sum; requires ad(n) nilpotent.
inline Element conjugate_element(const Element& m, const Element& n, const Rational& t) {
  Element::check_same_algebra(m, n);
  RatMatrix ad = ad_matrix(n).matrix;
  int index = detail::nilpotency_index(ad);
  if (index < 0)
    throw capability_error("conjugate_element: ad(n) is not nilpotent (ad(n)^" +
                           std::to_string(m.algebra()->dim()) + " != 0); use the truncated variant");
  std::vector<Rational> acc = m.coords();
  std::vector<Rational> term = m.coords();
  for (int k = 1; k < index; ++k) {
    term = ad.apply(term);
    Rational factor = t / Rational(static_cast<long>(k));
    for (auto& c : term) c *= factor;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
  }
  return Element(m.algebra(), std::move(acc));
}

/// Truncated series variant for non-nilpotent directions; exact in t but
/// only an order-`terms` approximation of the conjugation.
inline Element conjugate_element_truncated(const Element& m, const Element& n, const Rational& t, int terms) {
  Element::check_same_algebra(m, n);
  if (terms < 1) throw std::invalid_argument("conjugate_element_truncated: terms >= 1 required");
  RatMatrix ad = ad_matrix(n).matrix;
  std::vector<Rational> acc = m.coords();
  std::vector<Rational> term = m.coords();
  for (int k = 1; k < terms; ++k) {
    term = ad.apply(term);
    Rational factor = t / Rational(static_cast<long>(k));
    for (auto& c : term) c *= factor;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
  }
  return Element(m.algebra(), std::move(acc));
}

/// Fixpoint of: Lie-close the current span, then adjoin every rational
/// nonzero-eigenvalue eigenvector of ad(X) for each basis element X of the
/// span (deterministic index order). Models the invariant-direction
/// subalgebra generated by the seeds: a sound lower bound that is exact in
/// all the catalog cases. is_full reports whether it is everything.
struct InvarianceClosure {
  Subspace subspace;
  bool is_full = false;
  /// True when irrational real eigenvalues were skipped somewhere, i.e.
  /// the result is only certified as an under-approximation.
  bool irrational_skipped = false;
};

inline InvarianceClosure invariance_closure(const AlgebraPtr& a, const std::vector<Element>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("invariance_closure: empty seed list");
  Subspace current = lie_closure(a, seeds);
  bool irrational_skipped = false;
  while (true) {
    std::vector<Element> extended = current.basis_elements();
    for (const Element& x : current.basis_elements()) {
      AdMatrix ad = ad_matrix(x);
      AdSpectrum spectrum = ad_spectrum(ad);
      if (spectrum.has_irrational_real()) irrational_skipped = true;
      for (const auto& ev : spectrum.rational_eigenvalues) {
        if (ev.value.is_zero()) continue;
        for (const Element& e : eigenspace(ad, ev.value).basis_elements()) extended.push_back(e);
      }
    }
    Subspace next = lie_closure(a, extended);
    if (next.dim() == current.dim()) return {next, next.dim() == a->dim(), irrational_skipped};
    current = std::move(next);
  }
}

}  // namespace liekms
