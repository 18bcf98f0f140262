#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liekms/catalog.hpp"
#include "liekms/errors.hpp"
#include "liekms/essential.hpp"
#include "liekms/spectral.hpp"

namespace liekms {

/// beta = 2*pi / two_pi_over, kept symbolic so reports stay exact.
struct SymbolicBeta {
  Rational two_pi_over;
  std::string str() const { return "2π/" + two_pi_over.str(); }
};

/// Moduli of the nonzero ad-eigenvalues of an essential element, and the
/// inverse temperature they force when they are uniform.
struct TemperatureReport {
  std::vector<Rational> moduli;  // distinct |lambda|, ascending
  bool uniform = false;
  std::optional<SymbolicBeta> beta;
  std::string notes;
};

/// Requires m essential (precondition error otherwise; capability error
/// when the spectrum cannot be certified rational).
inline TemperatureReport kms_temperature(const Element& m) {
  EssentialityReport e = is_essential(m);
  if (e.verdict == Essentiality::unknown)
    throw capability_error("kms_temperature: " + e.failure_reason.value_or("spectrum not certifiable"));
  if (e.verdict != Essentiality::essential)
    throw precondition_error("kms_temperature: element is not essential (" +
                             e.failure_reason.value_or("") + ")");
  std::set<Rational> moduli;
  for (const auto& ev : e.spectrum.rational_eigenvalues)
    if (!ev.value.is_zero()) moduli.insert(ev.value.abs());
  TemperatureReport report;
  report.moduli.assign(moduli.begin(), moduli.end());
  report.uniform = report.moduli.size() <= 1;
  if (report.moduli.size() == 1) {
    report.beta = SymbolicBeta{report.moduli.front()};
    report.notes = "uniform modulus; the ladder relation [m, n] = lambda n fixes beta = 2pi/|lambda|";
  } else if (report.moduli.empty()) {
    report.notes = "ad(m) has no nonzero eigenvalues; no temperature is forced";
  } else {
    report.uniform = false;
    report.notes = "nonuniform moduli: distinct |lambda| would force incompatible KMS temperatures "
                   "2pi/|lambda|; no single beta is consistent with all ladder relations";
  }
  return report;
}

enum class ModularRelation { j_commuting, j_flipping, other };

inline const char* to_string(ModularRelation r) {
  switch (r) {
    case ModularRelation::j_commuting: return "J-commuting";
    case ModularRelation::j_flipping: return "J-flipping";
    default: return "other";
  }
}

struct CommutationRow {
  Element eigenvector;
  Rational eigenvalue;
  ModularRelation relation;
};

/// Classifies a rational eigenbasis of ad(m) by how the modular
/// conjugation of the induced dynamics must act on the corresponding
/// one-parameter groups: eigenvalue 0 commutes with J, eigenvalues
/// +-|lambda| anticommute in the flip sense, anything else is flagged.
///
/// With the default reference modulus (the uniform one of m) the "other"
/// bucket is empty by construction; pass lambda_abs explicitly to classify
/// against a chosen modulus instead.
inline std::vector<CommutationRow> modular_commutation_table(
    const Element& m, std::optional<Rational> lambda_abs = std::nullopt) {
  if (!lambda_abs) {
    TemperatureReport t = kms_temperature(m);
    if (!t.uniform)
      throw precondition_error(
          "modular_commutation_table: moduli are not uniform; pass a reference modulus explicitly");
    lambda_abs = t.moduli.empty() ? Rational(0) : t.moduli.front();
  } else {
    EssentialityReport e = is_essential(m);
    if (e.verdict == Essentiality::unknown)
      throw capability_error("modular_commutation_table: " + e.failure_reason.value_or(""));
    if (e.verdict != Essentiality::essential)
      throw precondition_error("modular_commutation_table: element is not essential");
  }
  AdMatrix ad = ad_matrix(m);
  std::vector<CommutationRow> rows;
  for (const auto& ev : ad_spectrum(ad).rational_eigenvalues) {
    ModularRelation rel = ev.value.is_zero()           ? ModularRelation::j_commuting
                          : ev.value.abs() == *lambda_abs ? ModularRelation::j_flipping
                                                          : ModularRelation::other;
    for (const Element& e : eigenspace(ad, ev.value).basis_elements())
      rows.push_back({e, ev.value, rel});
  }
  return rows;
}

/// {m, n_plus, n_minus} spanning a copy of sl(2, R):
///   [m, n_plus]  = +lambda n_plus
///   [m, n_minus] = -lambda n_minus
///   [n_plus, n_minus] = -2 lambda m
/// normalized so that rotation = (n_plus + n_minus)/2 satisfies
/// ad(rotation)^2 m = -lambda^2 m, i.e. conjugating m by exp(t rotation)
/// is periodic with period exactly 2pi/lambda.
struct Sl2Triple {
  Element m;
  Element n_plus;
  Element n_minus;
  Rational lambda;
  Element rotation;
  std::string scale_note;
};

/// Searches eigenvector pairs (n+, n-) in the (+lambda, -lambda)
/// eigenspaces whose bracket closes onto span{m}; each hit is rescaled on
/// the n_minus side only (rational) to meet the triple normalization.
/// Basis pairs are tried first, then a seeded randomized sweep over small
/// integer combinations of eigenspace basis vectors. An empty result is
/// not a proof of absence.
inline std::vector<Sl2Triple> find_sl2_triples(const Element& m, const Rational& lambda,
                                               int random_trials = 64, std::uint64_t seed = 1) {
  if (lambda.sign() <= 0) throw std::invalid_argument("find_sl2_triples: lambda must be positive");
  AdMatrix ad = ad_matrix(m);
  Subspace e_plus = eigenspace(ad, lambda);
  Subspace e_minus = eigenspace(ad, -lambda);
  if (e_plus.dim() == 0 || e_minus.dim() == 0)
    throw precondition_error("find_sl2_triples: +lambda and -lambda must both be ad(m)-eigenvalues");

  const AlgebraPtr& a = m.algebra();
  std::vector<Sl2Triple> out;
  std::set<std::pair<std::string, std::string>> seen;

  auto try_pair = [&](const Element& u, const Element& v) {
    if (u.is_zero() || v.is_zero()) return;
    Element b = bracket(u, v);
    // accept only when [u, v] lies on the line through m
    int k = -1;
    for (int i = 0; i < a->dim(); ++i)
      if (!m.coords()[i].is_zero()) { k = i; break; }
    Rational c = b.coords()[k] / m.coords()[k];
    if (c.is_zero()) return;
    if (!(b == c * m)) return;
    Rational alpha = Rational(-2) * lambda / c;
    Element n_minus = alpha * v;
    Element rotation = Rational(1, 2) * (u + n_minus);
    Sl2Triple triple{m, u, n_minus, lambda, rotation,
                     "n_minus rescaled by " + alpha.str() + " so that [n+, n-] = -2*lambda*m"};
    if (!(bracket(triple.m, triple.n_plus) == lambda * triple.n_plus)) return;
    if (!(bracket(triple.m, triple.n_minus) == -lambda * triple.n_minus)) return;
    if (!(bracket(triple.n_plus, triple.n_minus) == Rational(-2) * lambda * triple.m)) return;
    auto key = std::make_pair(triple.n_plus.expression(), triple.n_minus.expression());
    if (seen.insert(key).second) out.push_back(std::move(triple));
  };

  for (const Element& u : e_plus.basis_elements())
    for (const Element& v : e_minus.basis_elements()) try_pair(u, v);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < random_trials; ++trial) {
    Element u = Element::zero(a);
    for (const Element& e : e_plus.basis_elements()) u = u + Rational(coeff(rng)) * e;
    Element v = Element::zero(a);
    for (const Element& e : e_minus.basis_elements()) v = v + Rational(coeff(rng)) * e;
    try_pair(u, v);
  }
  return out;
}

namespace detail {

inline Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

inline Eigen::VectorXd coords_to_double(const Element& e) {
  Eigen::VectorXd out(e.coords().size());
  for (std::size_t i = 0; i < e.coords().size(); ++i) out(i) = e.coords()[i].to_double();
  return out;
}

}  // namespace detail

struct RotationCheck {
  /// Exact necessary condition for compactness: ad(rotation) has no
  /// nonzero real eigenvalue.
  bool ad_spectrum_imaginary = false;
  /// Present when the catalog entry carries a defining representation:
  /// whether exp((2pi/lambda) rotation) returns to the identity there.
  std::optional<bool> rep_periodic;
  std::optional<double> period_residual;
};

/// Representation-free variant: only the exact ad-spectrum condition.
inline RotationCheck rotation_compactness_check(const Sl2Triple& triple) {
  RotationCheck check;
  Poly s = squarefree_part(char_poly(ad_matrix(triple.rotation)));
  int real_roots = SturmChain(s).count_all();
  bool zero_root = s.eval(Rational(0)).is_zero();
  check.ad_spectrum_imaginary = (real_roots == (zero_root ? 1 : 0));
  return check;
}

inline RotationCheck rotation_compactness_check(const CatalogEntry& entry, const Sl2Triple& triple) {
  if (triple.m.algebra() != entry.algebra)
    throw std::invalid_argument("rotation_compactness_check: triple does not belong to the entry's algebra");
  RotationCheck check = rotation_compactness_check(triple);
  if (entry.defining_rep) {
    const auto& reps = *entry.defining_rep;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(reps.front().rows(), reps.front().cols());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      double c = triple.rotation.coords()[k].to_double();
      if (c != 0.0) r += c * detail::to_double(reps[k]);
    }
    double period = 2.0 * std::numbers::pi / triple.lambda.to_double();
    Eigen::MatrixXd p = (period * r).exp();
    double residual = (p - Eigen::MatrixXd::Identity(p.rows(), p.cols())).cwiseAbs().maxCoeff();
    check.period_residual = residual;
    check.rep_periodic = residual <= 1e-9;
  }
  return check;
}

/// Residual of the closed-form conjugation identity
///   exp(t ad(rotation)) m = cos(lambda t) m - (1/2) sin(lambda t) (n+ - n-)
/// at t = angle_in_pi * pi / lambda, evaluated by an order-`terms` series.
/// At half-integer angle_in_pi the target's cos/sin are exact integers.
inline double rotation_conjugation_identity(const Sl2Triple& triple, const Rational& angle_in_pi,
                                            int terms = 40) {
  if (angle_in_pi.is_zero()) return 0.0;
  double t = angle_in_pi.to_double() * std::numbers::pi / triple.lambda.to_double();
  Eigen::MatrixXd ad = detail::to_double(ad_matrix(triple.rotation).matrix);
  Eigen::VectorXd acc = detail::coords_to_double(triple.m);
  Eigen::VectorXd term = acc;
  for (int k = 1; k <= terms; ++k) {
    term = (t / k) * (ad * term);
    acc += term;
  }
  double cos_v, sin_v;
  Rational two_u = Rational(2) * angle_in_pi;
  if (two_u.is_integer()) {  // angle a multiple of pi/2: exact targets
    long rem = mpz_class(two_u.numerator() % 4).get_si();
    if (rem < 0) rem += 4;
    cos_v = (rem == 0) ? 1.0 : (rem == 2) ? -1.0 : 0.0;
    sin_v = (rem == 1) ? 1.0 : (rem == 3) ? -1.0 : 0.0;
  } else {
    cos_v = std::cos(angle_in_pi.to_double() * std::numbers::pi);
    sin_v = std::sin(angle_in_pi.to_double() * std::numbers::pi);
  }
  Eigen::VectorXd target = cos_v * detail::coords_to_double(triple.m) -
                           0.5 * sin_v * (detail::coords_to_double(triple.n_plus) -
                                          detail::coords_to_double(triple.n_minus));
  return (acc - target).cwiseAbs().maxCoeff();
}

}  // namespace liekms
