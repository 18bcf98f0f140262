#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace liekms::toy {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Finite-dimensional thermal surrogate: a Gibbs density rho = e^(-beta H)/Z
/// on the full n x n matrix algebra, with the standard doubled-space
/// (Hilbert-Schmidt) picture. The cyclic vector Omega is sqrt(rho) viewed
/// as a matrix; the modular operator acts as Delta^z(X) = rho^z X rho^(-z)
/// and the modular conjugation as J(X) = X^dagger.
///
/// This surrogate carries the full KMS/modular structure of the dynamics
/// e^(itH), but no finite-dimensional model can also realize a nonzero
/// ladder relation [H, N] = lambda N with unitary exp(tN) (the trace of
/// the relation forces N = 0), so the ladder side of the theory lives in
/// the exact Lie-algebra modules instead.
struct ModularToyState {
  int n = 0;
  double beta = 0.0;
  Mat hamiltonian;
  Eigen::VectorXd h_eigenvalues;  // ascending
  Mat h_eigenvectors;             // unitary U with H = U diag U^dagger
  Eigen::VectorXd rho_weights;    // Gibbs weights in the H eigenbasis, sum 1
  Mat rho;
  Mat omega;  // sqrt(rho)

  /// rho^z X rho^(-z) for real z (z = it gives the modular flow).
  Mat delta_power(Complex z, const Mat& x) const {
    Eigen::VectorXcd wz(n), wmz(n);
    for (int i = 0; i < n; ++i) {
      Complex lw = std::log(rho_weights(i));
      wz(i) = std::exp(z * lw);
      wmz(i) = std::exp(-z * lw);
    }
    Mat left = h_eigenvectors * wz.asDiagonal() * h_eigenvectors.adjoint();
    Mat right = h_eigenvectors * wmz.asDiagonal() * h_eigenvectors.adjoint();
    return left * x * right;
  }

  /// e^(izH) for complex z, via the spectral decomposition of H.
  Mat evolve(Complex z) const {
    Eigen::VectorXcd phase(n);
    for (int i = 0; i < n; ++i) phase(i) = std::exp(Complex(0, 1) * z * Complex(h_eigenvalues(i), 0));
    return h_eigenvectors * phase.asDiagonal() * h_eigenvectors.adjoint();
  }

  /// Heisenberg dynamics alpha_z(B) = e^(izH) B e^(-izH), complex time.
  Mat heisenberg(Complex z, const Mat& b) const { return evolve(z) * b * evolve(-z); }

  static Mat j_conjugate(const Mat& x) { return x.adjoint(); }

  /// Spectrum of the modular operator: all ratios w_i / w_j.
  std::vector<double> delta_spectrum() const {
    std::vector<double> out;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.push_back(rho_weights(i) / rho_weights(j));
    return out;
  }
};

inline ModularToyState gibbs_state(const Mat& h, double beta) {
  if (h.rows() != h.cols() || h.rows() == 0) throw std::invalid_argument("gibbs_state: square matrix required");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("gibbs_state: Hamiltonian is not hermitian (tolerance 1e-12)");
  if (!(beta > 0)) throw std::invalid_argument("gibbs_state: beta > 0 required");
  ModularToyState s;
  s.n = static_cast<int>(h.rows());
  s.beta = beta;
  s.hamiltonian = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(s.hamiltonian);
  s.h_eigenvalues = solver.eigenvalues();
  s.h_eigenvectors = solver.eigenvectors();
  double dmin = s.h_eigenvalues.minCoeff();
  Eigen::VectorXd w(s.n);
  for (int i = 0; i < s.n; ++i) w(i) = std::exp(-beta * (s.h_eigenvalues(i) - dmin));
  w /= w.sum();
  s.rho_weights = w;
  s.rho = s.h_eigenvectors * w.asDiagonal().toDenseMatrix().cast<Complex>() * s.h_eigenvectors.adjoint();
  Eigen::VectorXd wsqrt = w.cwiseSqrt();
  s.omega = s.h_eigenvectors * wsqrt.asDiagonal().toDenseMatrix().cast<Complex>() * s.h_eigenvectors.adjoint();
  return s;
}

/// KMS boundary residual |F(t + i beta') - tr(rho alpha_t(B) A)| for
/// F(z) = tr(rho A alpha_z(B)), with an arbitrary density (negative
/// controls pass a perturbed rho or a wrong beta; Gibbs data makes it 0).
inline double kms_residual(const ModularToyState& s, const Mat& rho, const Mat& a, const Mat& b,
                           double t, double beta) {
  if (a.rows() != s.n || a.cols() != s.n || b.rows() != s.n || b.cols() != s.n || rho.rows() != s.n)
    throw std::invalid_argument("kms_residual: observable dimension mismatch");
  Complex lhs = (rho * a * s.heisenberg(Complex(t, beta), b)).trace();
  Complex rhs = (rho * s.heisenberg(Complex(t, 0), b) * a).trace();
  return std::abs(lhs - rhs);
}

inline double kms_verify(const ModularToyState& s, const Mat& a, const Mat& b, double t,
                         std::optional<double> beta_override = std::nullopt) {
  return kms_residual(s, s.rho, a, b, t, beta_override.value_or(s.beta));
}

/// Max deviation, over the matrix-unit probe basis, between the modular
/// flow Delta^(it) and the rescaled backwards dynamics e^(-i beta t H) .
/// e^(i beta t H) conjugation.
inline double modular_covariance_check(const ModularToyState& s, double t) {
  Mat flow_left = s.evolve(Complex(-s.beta * t, 0));  // e^(-i beta t H)
  double worst = 0.0;
  for (int k = 0; k < s.n; ++k)
    for (int l = 0; l < s.n; ++l) {
      Mat x = Mat::Zero(s.n, s.n);
      x(k, l) = 1.0;
      Mat lhs = s.delta_power(Complex(0, t), x);
      Mat rhs = flow_left * x * flow_left.adjoint();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

/// Residual of the Tomita relation J(A Omega) = Delta^(1/2)(A^dagger Omega),
/// in Hilbert-Schmidt norm.
inline double j_action_check(const ModularToyState& s, const Mat& a) {
  if (a.rows() != s.n || a.cols() != s.n) throw std::invalid_argument("j_action_check: dimension mismatch");
  Mat lhs = ModularToyState::j_conjugate(a * s.omega);
  Mat rhs = s.delta_power(Complex(0.5, 0), a.adjoint() * s.omega);
  return (lhs - rhs).norm();
}

inline Mat random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline Mat random_hermitian(int n, std::mt19937_64& rng) {
  Mat m = random_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

inline Mat random_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(random_matrix(n, rng));
  return qr.householderQ();
}

struct PassivityResult {
  double min_gap = 0.0;
  int violations = 0;
};

/// Samples energy gaps tr(rho V^dagger H V) - tr(rho H) over unitary
/// perturbations V. Trial 0 is the identity (gap exactly zero); the next
/// trials are the transpositions of H-eigenvectors, which include the
/// classical worst case; the rest are seeded Haar-style unitaries (QR of
/// complex Gaussians). Gaps below -1e-10 count as violations; a Gibbs
/// density admits none.
inline PassivityResult passivity_sample_density(const Mat& rho, const Mat& h, int trials,
                                                std::uint64_t rng_seed) {
  if (trials < 1) throw std::invalid_argument("passivity_sample: trials >= 1 required");
  if (rho.rows() != h.rows() || rho.cols() != h.cols() || h.rows() != h.cols())
    throw std::invalid_argument("passivity_sample: dimension mismatch");
  const int n = static_cast<int>(h.rows());
  Eigen::SelfAdjointEigenSolver<Mat> solver(h);
  Mat u = solver.eigenvectors();

  double base = (rho * h).trace().real();
  PassivityResult result;
  result.min_gap = 0.0;

  std::vector<Mat> probes;
  probes.push_back(Mat::Identity(n, n));
  for (int i = 0; i < n && static_cast<int>(probes.size()) < trials; ++i)
    for (int j = i + 1; j < n && static_cast<int>(probes.size()) < trials; ++j) {
      Mat p = Mat::Identity(n, n);
      p(i, i) = 0.0;
      p(j, j) = 0.0;
      p(i, j) = 1.0;
      p(j, i) = 1.0;
      probes.push_back(u * p * u.adjoint());
    }
  std::mt19937_64 rng(rng_seed);
  while (static_cast<int>(probes.size()) < trials) probes.push_back(random_unitary(n, rng));

  bool first = true;
  for (const Mat& v : probes) {
    double gap = (rho * (v.adjoint() * h * v)).trace().real() - base;
    if (first) gap = 0.0, first = false;  // V = I: gap is zero by definition
    if (gap < result.min_gap) result.min_gap = gap;
    if (gap < -1e-10) ++result.violations;
  }
  return result;
}

inline PassivityResult passivity_sample(const ModularToyState& s, int trials, std::uint64_t rng_seed) {
  return passivity_sample_density(s.rho, s.hamiltonian, trials, rng_seed);
}

}  // namespace liekms::toy
