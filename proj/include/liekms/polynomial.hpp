#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekms/rational.hpp"

namespace liekms {

/// Univariate polynomial over Q, coefficients in ascending degree order,
/// no trailing zeros. Zero polynomial has degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& r) { return Poly(std::vector<Rational>{r}); }
  static Poly monomial(const Rational& coeff, std::size_t deg) {
    std::vector<Rational> c(deg + 1);
    c[deg] = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(std::size_t k) const {
    static const Rational zero(0);
    return k < c_.size() ? c_[k] : zero;
  }
  const Rational& leading() const {
    if (c_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
    return c_.back();
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> c(a.c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.c_[k];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Exact Euclidean division; returns {quotient, remainder}.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("Poly: division by zero polynomial");
    Poly r = a;
    std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = r.degree() - b.degree();
      Rational f = r.leading() * lead_inv;
      q[shift] = f;
      for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[shift + k] -= f * b.c_[k];
      r.trim();
    }
    return {Poly(std::move(q)), r};
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += c_[k].sign() > 0 ? " + " : " - ";
      else if (c_[k].sign() < 0) out += "-";
      Rational a = c_[k].abs();
      if (k == 0 || a != Rational(1)) out += a.str();
      if (k > 0) {
        if (a != Rational(1)) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

namespace detail {

/// Positive rescaling to primitive integer coefficients. Positive scaling
/// preserves the sign of every evaluation, which Sturm counting relies on.
inline Poly sign_faithful_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) den_lcm = lcm(den_lcm, c.denominator());
  mpz_class content = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) content = gcd(content, mpz_class(c.numerator() * (den_lcm / c.denominator())));
  Rational scale = Rational(mpz_class(den_lcm)) / Rational(content);
  return scale * p;
}

}  // namespace detail

/// Monic gcd over Q (Euclid with primitive normalization of remainders).
inline Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    if (a.is_zero()) return a;
    return a.leading().inverse() * a;
  }
  a = detail::sign_faithful_primitive(a);
  b = detail::sign_faithful_primitive(b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly() : detail::sign_faithful_primitive(r);
  }
  return a.leading().inverse() * a;
}

/// Product of the distinct irreducible factors: p / gcd(p, p'), made monic.
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Poly: squarefree part of zero polynomial");
  if (p.degree() == 0) return Poly::constant(Rational(1));
  Poly g = poly_gcd(p, p.derivative());
  Poly q = divmod(p, g).first;
  return q.leading().inverse() * q;
}

/// Yun's squarefree decomposition: p = lc * prod f_i^i with the f_i monic,
/// squarefree and pairwise coprime. Returns pairs (f_i, i) with deg f_i > 0.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Poly: squarefree decomposition of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() == 0) return out;
  Poly f = p.leading().inverse() * p;
  Poly g = poly_gcd(f, f.derivative());
  Poly c = divmod(f, g).first;
  Poly d = divmod(f.derivative(), g).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly a = poly_gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
    ++i;
  }
  return out;
}

/// Sturm chain for exact real-root counting. Callers pass a squarefree
/// polynomial; entries are kept as primitive integer polynomials.
class SturmChain {
public:
  explicit SturmChain(const Poly& squarefree) {
    Poly a = detail::sign_faithful_primitive(squarefree);
    if (a.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(a);
    Poly b = detail::sign_faithful_primitive(a.derivative());
    while (!b.is_zero()) {
      chain_.push_back(b);
      if (b.degree() == 0) break;
      Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      b = r.is_zero() ? Poly() : detail::sign_faithful_primitive(Rational(-1) * r);
    }
  }

  int sign_changes_at(const Rational& x) const {
    int changes = 0, last = 0;
    for (const Poly& p : chain_) {
      int s = p.eval(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  int sign_changes_at_neg_inf() const { return sign_changes_limit(-1); }
  int sign_changes_at_pos_inf() const { return sign_changes_limit(+1); }

  /// Number of distinct real roots in the half-open interval (a, b].
  int count_in(const Rational& a, const Rational& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
  }
  int count_all() const { return sign_changes_at_neg_inf() - sign_changes_at_pos_inf(); }

private:
  int sign_changes_limit(int direction) const {
    int changes = 0, last = 0;
    for (const Poly& p : chain_) {
      if (p.is_zero()) continue;
      int s = p.leading().sign();
      if (direction < 0 && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<Poly> chain_;
};

/// Number of distinct real roots of p (multiplicities ignored).
inline int real_root_count(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmChain(squarefree_part(p)).count_all();
}

namespace detail {

/// Integer roots of a monic squarefree integer polynomial, by Sturm
/// bisection over integer endpoints. No factoring of the constant term.
inline std::vector<mpz_class> integer_roots_monic_squarefree(const Poly& s) {
  std::vector<mpz_class> roots;
  if (s.degree() <= 0) return roots;
  // Cauchy bound: all roots lie strictly inside [-B, B], B = 2 + max |c_i|.
  mpz_class bound = 0;
  for (const auto& c : s.coeffs()) {
    mpz_class a = abs(c.numerator());
    if (a > bound) bound = a;
  }
  bound += 2;
  SturmChain chain(s);
  struct Range {
    mpz_class lo, hi;
  };
  std::vector<Range> stack{{-bound, bound}};
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (chain.count_in(Rational(r.lo), Rational(r.hi)) == 0) continue;
    if (r.hi - r.lo <= 1) {
      if (s.eval(Rational(r.hi)).is_zero()) roots.push_back(r.hi);
      continue;
    }
    mpz_class mid;
    mpz_class span = r.lo + r.hi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), span.get_mpz_t(), 1);
    stack.push_back({r.lo, mid});
    stack.push_back({mid, r.hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// All rational roots of p with multiplicities, ascending.
/// Monic-shift trick plus exact Sturm isolation: rational roots of the
/// primitive integer form are y/a for integer roots y of a monic integer
/// polynomial, so the search never factors big constant terms.
inline std::vector<std::pair<Rational, int>> rational_roots(const Poly& p_in) {
  if (p_in.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  if (p_in.degree() == 0) return out;

  Poly p = detail::sign_faithful_primitive(p_in);
  int zero_mult = 0;
  while (p.coeff(0).is_zero() && p.degree() > 0) {
    std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rational(0), zero_mult);
  if (p.degree() == 0) {
    return out;
  }

  Rational a(p.leading());
  int d = p.degree();
  std::vector<Rational> qc(d + 1);
  Rational pow(1);
  for (int k = d; k >= 0; --k) {  // q_k = p_k * a^(d-1-k)
    qc[k] = p.coeff(k) * pow / a;
    pow *= a;
  }
  Poly q(std::move(qc));
  Poly s = detail::sign_faithful_primitive(squarefree_part(q));

  for (const mpz_class& y : detail::integer_roots_monic_squarefree(s)) {
    Rational x = Rational(y) / a;
    Poly linear(std::vector<Rational>{-x, Rational(1)});
    Poly rem = p;
    int mult = 0;
    while (true) {
      auto [quot, rr] = divmod(rem, linear);
      if (!rr.is_zero()) break;
      rem = quot;
      ++mult;
    }
    if (mult > 0) out.emplace_back(x, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

}  // namespace liekms
