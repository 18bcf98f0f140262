#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekms/lie_algebra.hpp"
#include "liekms/matrix.hpp"

namespace liekms {

enum class Family { gl, sl, sp, so_pq, su, poincare };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::sp: return "sp";
    case Family::so_pq: return "so";
    case Family::su: return "su";
    case Family::poincare: return "poincare";
  }
  return "?";
}

/// A catalog algebra together with its golden essentiality data and, when
/// the construction is by rational matrices, the defining representation.
struct CatalogEntry {
  Family family;
  std::vector<int> params;
  AlgebraPtr algebra;
  /// (element, expected essentiality) golden pairs.
  std::vector<std::pair<Element, bool>> known_essential;
  /// Set for the compact families (so(n), su(n)): no element is essential.
  bool no_essential_elements = false;
  /// Matrices realizing the brackets, one per basis element, same order.
  std::optional<std::vector<RatMatrix>> defining_rep;
  std::string notes;

  std::string spec_string() const {
    std::string s = family_name(family) + ":";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s;
  }
};

namespace detail {

inline std::vector<Rational> vec_matrix(const RatMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

/// Builds exact structure constants from a faithful matrix realization:
/// commutators of the representatives are re-coordinatized in the basis.
inline AlgebraPtr algebra_from_representation(std::string name, std::vector<std::string> labels,
                                              const std::vector<RatMatrix>& reps) {
  const int dim = static_cast<int>(labels.size());
  if (static_cast<int>(reps.size()) != dim)
    throw std::invalid_argument("algebra_from_representation: one matrix per basis element required");
  const std::size_t m = reps.front().rows();
  RatMatrix basis_cols(m * m, dim);
  for (int k = 0; k < dim; ++k) {
    std::vector<Rational> v = vec_matrix(reps[k]);
    for (std::size_t r = 0; r < v.size(); ++r) basis_cols(r, k) = v[r];
  }
  LinearSolver solver(basis_cols);
  std::map<std::pair<int, int>, LieAlgebra::SparseVec> brackets;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      RatMatrix comm = reps[i] * reps[j] - reps[j] * reps[i];
      std::vector<Rational> coords = solver.coordinates(vec_matrix(comm));
      LieAlgebra::SparseVec sparse;
      for (int k = 0; k < dim; ++k)
        if (!coords[k].is_zero()) sparse.emplace_back(k, coords[k]);
      if (!sparse.empty()) brackets[{i, j}] = std::move(sparse);
    }
  return std::make_shared<LieAlgebra>(std::move(name), std::move(labels), std::move(brackets));
}

inline RatMatrix unit_matrix(std::size_t n, std::size_t row, std::size_t col) {
  RatMatrix m(n, n);
  m(row, col) = Rational(1);
  return m;
}

inline std::string pair_label(const std::string& stem, int a, int b, int max_index) {
  if (max_index <= 9) return stem + std::to_string(a) + std::to_string(b);
  return stem + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace detail

/// gl(n, R): basis e[mu][nu] = E(mu, nu), 1-based indices, row-major order.
/// Golden data: every diagonal e[nu][nu] is essential; the identity is not.
inline CatalogEntry build_gl(int n) {
  if (n < 1) throw std::invalid_argument("build_gl: n >= 1 required");
  std::vector<std::string> labels;
  std::vector<RatMatrix> reps;
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      labels.push_back(detail::pair_label("e", mu, nu, n));
      reps.push_back(detail::unit_matrix(n, mu - 1, nu - 1));
    }
  CatalogEntry entry;
  entry.family = Family::gl;
  entry.params = {n};
  entry.algebra = detail::algebra_from_representation("gl:" + std::to_string(n), std::move(labels), reps);
  entry.defining_rep = std::move(reps);
  for (int nu = 1; nu <= n; ++nu) {
    std::vector<Rational> c(entry.algebra->dim());
    c[(nu - 1) * n + (nu - 1)] = Rational(1);
    entry.known_essential.emplace_back(Element(entry.algebra, std::move(c)), true);
  }
  {
    std::vector<Rational> c(entry.algebra->dim());
    for (int nu = 1; nu <= n; ++nu) c[(nu - 1) * n + (nu - 1)] = Rational(1);
    entry.known_essential.emplace_back(Element(entry.algebra, std::move(c)), false);  // identity is central
  }
  return entry;
}

/// sl(n, R): basis e[nu] = E(nu,nu) - E(nu+1,nu+1) for nu < n, then
/// f[mu][nu] = E(mu, nu) for mu != nu, row-major. Every e[nu] is essential.
inline CatalogEntry build_sl(int n) {
  if (n < 2) throw std::invalid_argument("build_sl: n >= 2 required");
  std::vector<std::string> labels;
  std::vector<RatMatrix> reps;
  for (int nu = 1; nu < n; ++nu) {
    labels.push_back("e" + std::to_string(nu));
    RatMatrix m(n, n);
    m(nu - 1, nu - 1) = Rational(1);
    m(nu, nu) = Rational(-1);
    reps.push_back(std::move(m));
  }
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      if (mu == nu) continue;
      labels.push_back(detail::pair_label("f", mu, nu, n));
      reps.push_back(detail::unit_matrix(n, mu - 1, nu - 1));
    }
  CatalogEntry entry;
  entry.family = Family::sl;
  entry.params = {n};
  entry.algebra = detail::algebra_from_representation("sl:" + std::to_string(n), std::move(labels), reps);
  entry.defining_rep = std::move(reps);
  for (int nu = 1; nu < n; ++nu)
    entry.known_essential.emplace_back(Element::basis(entry.algebra, nu - 1), true);
  return entry;
}

/// sp(2n, R): block matrices [[A, B], [C, -A^T]] with B, C symmetric.
/// Basis: h[mu][nu] = E(mu,nu) - E(nu+n,mu+n) for all mu,nu, then
/// f[mu][nu] = E(mu,nu+n) + E(nu,mu+n) and
/// g[mu][nu] = E(mu+n,nu) + E(nu+n,mu) for mu <= nu.
///
/// f and g are symmetric in their indices, so only mu <= nu instances are
/// kept as basis members; that identification is what makes the dimension
/// come out as 2n^2 + n. Every h[nu][nu] is essential.
inline CatalogEntry build_sp(int n) {
  if (n < 1) throw std::invalid_argument("build_sp: n >= 1 required");
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  std::vector<std::string> labels;
  std::vector<RatMatrix> reps;
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      labels.push_back(detail::pair_label("h", mu, nu, n));
      RatMatrix m(d, d);
      m(mu - 1, nu - 1) += Rational(1);
      m(nu - 1 + n, mu - 1 + n) -= Rational(1);
      reps.push_back(std::move(m));
    }
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu; nu <= n; ++nu) {
      labels.push_back(detail::pair_label("f", mu, nu, n));
      RatMatrix m(d, d);
      m(mu - 1, nu - 1 + n) += Rational(1);
      m(nu - 1, mu - 1 + n) += Rational(1);
      reps.push_back(std::move(m));
    }
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu; nu <= n; ++nu) {
      labels.push_back(detail::pair_label("g", mu, nu, n));
      RatMatrix m(d, d);
      m(mu - 1 + n, nu - 1) += Rational(1);
      m(nu - 1 + n, mu - 1) += Rational(1);
      reps.push_back(std::move(m));
    }
  CatalogEntry entry;
  entry.family = Family::sp;
  entry.params = {n};
  entry.algebra = detail::algebra_from_representation("sp:" + std::to_string(n), std::move(labels), reps);
  entry.defining_rep = std::move(reps);
  entry.notes = "f and g labels are index-symmetric; only mu <= nu instances are basis members";
  for (int nu = 1; nu <= n; ++nu)
    entry.known_essential.emplace_back(Element::basis(entry.algebra, (nu - 1) * n + (nu - 1)), true);
  return entry;
}

/// so(p, q): basis m[mu][nu] for mu < nu over p+q indices, metric
/// diag(+1 x p, -1 x q). Indices are 1-based except for p = 1, where the
/// time index is written 0 (labels m01, m02, ...) to match the usual
/// Lorentz convention.
///
/// Golden data: for p, q >= 1 every mixed-signature m[mu][nu]
/// (mu <= p < nu) is essential; for p = 0 or q = 0 the algebra is compact
/// and has no essential elements.
inline CatalogEntry build_so(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw std::invalid_argument("build_so: p, q >= 0 and p + q >= 2 required");
  const int n = p + q;
  const int label_base = (p == 1) ? 0 : 1;
  std::vector<int> metric(n);
  for (int i = 0; i < n; ++i) metric[i] = i < p ? 1 : -1;
  std::vector<std::string> labels;
  std::vector<RatMatrix> reps;
  std::map<std::pair<int, int>, int> index_of;  // 1-based (mu, nu) -> basis index
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu) {
      index_of[{mu, nu}] = static_cast<int>(labels.size());
      labels.push_back(detail::pair_label("m", mu - 1 + label_base, nu - 1 + label_base, n - 1 + label_base));
      // (m[mu][nu])^rho_sigma = g[mu][sigma] delta^rho_nu - g[nu][sigma] delta^rho_mu
      RatMatrix m(n, n);
      m(nu - 1, mu - 1) = Rational(metric[mu - 1]);
      m(mu - 1, nu - 1) = Rational(-metric[nu - 1]);
      reps.push_back(std::move(m));
    }
  CatalogEntry entry;
  entry.family = Family::so_pq;
  entry.params = {p, q};
  entry.algebra = detail::algebra_from_representation("so:" + std::to_string(p) + "," + std::to_string(q),
                                                      std::move(labels), reps);
  entry.defining_rep = std::move(reps);
  if (p == 0 || q == 0) {
    entry.no_essential_elements = true;
  } else {
    for (int mu = 1; mu <= p; ++mu)
      for (int nu = p + 1; nu <= n; ++nu)
        entry.known_essential.emplace_back(Element::basis(entry.algebra, index_of[{mu, nu}]), true);
  }
  return entry;
}

/// su(n), realified: basis x1..x[n^2-1] listing E(mu,nu) - E(nu,mu), then
/// i(E(mu,nu) + E(nu,mu)) for mu < nu, then i(E(nu,nu) - E(nu+1,nu+1)).
/// All structure constants are integers in this basis. The defining_rep
/// stores the 2n x 2n real form [[P, -Q], [Q, P]] of each P + iQ.
/// Compact: no essential elements.
inline CatalogEntry build_su(int n) {
  if (n < 2) throw std::invalid_argument("build_su: n >= 2 required");
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  auto realified = [&](const RatMatrix& re, const RatMatrix& im) {
    RatMatrix m(d, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = re(i, j);
        m(i + n, j + n) = re(i, j);
        m(i + n, j) = im(i, j);
        m(i, j + n) = -im(i, j);
      }
    return m;
  };
  std::vector<RatMatrix> reps;
  RatMatrix zero(n, n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) {
      RatMatrix re(n, n);
      re(mu, nu) = Rational(1);
      re(nu, mu) = Rational(-1);
      reps.push_back(realified(re, zero));
    }
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) {
      RatMatrix im(n, n);
      im(mu, nu) = Rational(1);
      im(nu, mu) = Rational(1);
      reps.push_back(realified(zero, im));
    }
  for (int nu = 0; nu + 1 < n; ++nu) {
    RatMatrix im(n, n);
    im(nu, nu) = Rational(1);
    im(nu + 1, nu + 1) = Rational(-1);
    reps.push_back(realified(zero, im));
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < reps.size(); ++k) labels.push_back("x" + std::to_string(k + 1));
  CatalogEntry entry;
  entry.family = Family::su;
  entry.params = {n};
  entry.algebra = detail::algebra_from_representation("su:" + std::to_string(n), std::move(labels), reps);
  entry.defining_rep = std::move(reps);
  entry.no_essential_elements = true;
  return entry;
}

/// Poincare algebra so(1, n) x| R^(n+1): boost/rotation basis m[0..n] as in
/// build_so(1, n), then translations p0..pn. Realized by (n+2) x (n+2)
/// affine matrices. The boosts m[0][nu] stay essential.
inline CatalogEntry build_poincare(int n) {
  if (n < 2) throw std::invalid_argument("build_poincare: n >= 2 required");
  const int nn = n + 1;  // spacetime indices 0..n
  const std::size_t d = static_cast<std::size_t>(nn) + 1;
  std::vector<int> metric(nn);
  for (int i = 0; i < nn; ++i) metric[i] = i == 0 ? 1 : -1;
  std::vector<std::string> labels;
  std::vector<RatMatrix> reps;
  std::map<std::pair<int, int>, int> index_of;  // 0-based (mu, nu), mu < nu
  for (int mu = 0; mu < nn; ++mu)
    for (int nu = mu + 1; nu < nn; ++nu) {
      index_of[{mu, nu}] = static_cast<int>(labels.size());
      labels.push_back(detail::pair_label("m", mu, nu, n));
      RatMatrix m(d, d);
      m(nu, mu) = Rational(metric[mu]);
      m(mu, nu) = Rational(-metric[nu]);
      reps.push_back(std::move(m));
    }
  for (int mu = 0; mu < nn; ++mu) {
    labels.push_back("p" + std::to_string(mu));
    RatMatrix m(d, d);
    m(mu, nn) = Rational(1);
    reps.push_back(std::move(m));
  }
  CatalogEntry entry;
  entry.family = Family::poincare;
  entry.params = {n};
  entry.algebra = detail::algebra_from_representation("poincare:" + std::to_string(n), std::move(labels), reps);
  entry.defining_rep = std::move(reps);
  for (int nu = 1; nu < nn; ++nu)
    entry.known_essential.emplace_back(Element::basis(entry.algebra, index_of[{0, nu}]), true);
  return entry;
}

/// Parses a catalog spec string: "gl:3", "sl:2", "sp:2", "so:1,2", "su:2",
/// "poincare:3".
inline CatalogEntry build_from_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("catalog spec must look like family:params, e.g. so:1,2");
  std::string family = spec.substr(0, colon);
  std::vector<int> params;
  std::string rest = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    std::size_t comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("catalog spec '" + spec + "': malformed parameter '" + tok + "'");
    params.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("catalog spec '" + spec + "': expected " + std::to_string(k) + " parameter(s)");
  };
  if (family == "gl") { need(1); return build_gl(params[0]); }
  if (family == "sl") { need(1); return build_sl(params[0]); }
  if (family == "sp") { need(1); return build_sp(params[0]); }
  if (family == "so") { need(2); return build_so(params[0], params[1]); }
  if (family == "su") { need(1); return build_su(params[0]); }
  if (family == "poincare") { need(1); return build_poincare(params[0]); }
  throw std::invalid_argument("catalog spec '" + spec + "': unknown family '" + family + "'");
}

inline std::vector<std::string> catalog_family_usage() {
  return {"gl:n (n >= 1)",      "sl:n (n >= 2)", "sp:n (builds sp(2n,R), n >= 1)",
          "so:p,q (p + q >= 2)", "su:n (n >= 2)", "poincare:n (n >= 2)"};
}

}  // namespace liekms
