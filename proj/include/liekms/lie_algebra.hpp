#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "liekms/matrix.hpp"
#include "liekms/rational.hpp"

namespace liekms {

/// Finite-dimensional real Lie algebra given by exact structure constants.
///
/// Structure constants are stored sparsely, keyed by ordered basis pairs
/// i < j; antisymmetry supplies the rest. Immutable once built, so values
/// can be shared freely across threads.
class LieAlgebra {
public:
  /// Coordinates of a bracket [b_i, b_j], sparse: (k, coefficient) pairs
  /// sorted by k, zero coefficients omitted.
  using SparseVec = std::vector<std::pair<int, Rational>>;

  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             std::map<std::pair<int, int>, SparseVec> brackets)
      : name_(std::move(name)), labels_(std::move(basis_labels)), brackets_(std::move(brackets)) {
    for (auto& [key, vec] : brackets_) {
      auto [i, j] = key;
      if (i < 0 || j < 0 || i >= dim() || j >= dim() || i >= j)
        throw std::invalid_argument("LieAlgebra: bracket keys must satisfy 0 <= i < j < dim");
      for (auto& [k, c] : vec)
        if (k < 0 || k >= dim()) throw std::invalid_argument("LieAlgebra: bracket coefficient index out of range");
    }
  }

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::map<std::pair<int, int>, SparseVec>& brackets() const { return brackets_; }

  int label_index(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
      if (labels_[i] == label) return i;
    return -1;
  }

  /// Coordinates of [b_i, b_j] as a dense vector.
  std::vector<Rational> basis_bracket(int i, int j) const {
    std::vector<Rational> out(dim());
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return out;
    for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
    return out;
  }

  /// Bilinear extension of the basis brackets to coordinate vectors.
  std::vector<Rational> bracket_coords(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> out(dim());
    for (const auto& [key, vec] : brackets_) {
      auto [i, j] = key;
      // contribution of the pair (i, j): (x_i y_j - x_j y_i) * c_{ij}
      Rational w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      for (const auto& [k, c] : vec) out[k] += w * c;
    }
    return out;
  }

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, SparseVec> brackets_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Element of a Lie algebra: exact coordinates in the algebra's basis.
class Element {
public:
  Element(AlgebraPtr algebra, std::vector<Rational> coords)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_) throw std::invalid_argument("Element: null algebra");
    if (static_cast<int>(coords_.size()) != algebra_->dim())
      throw std::invalid_argument("Element: coordinate length does not match algebra dimension");
  }

  static Element zero(AlgebraPtr algebra) {
    std::vector<Rational> c(algebra->dim());
    return Element(std::move(algebra), std::move(c));
  }
  static Element basis(AlgebraPtr algebra, int i) {
    std::vector<Rational> c(algebra->dim());
    c.at(i) = Rational(1);
    return Element(std::move(algebra), std::move(c));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend Element operator+(const Element& a, const Element& b) {
    check_same_algebra(a, b);
    std::vector<Rational> c(a.coords_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coords_[k] + b.coords_[k];
    return Element(a.algebra_, std::move(c));
  }
  friend Element operator-(const Element& a, const Element& b) {
    check_same_algebra(a, b);
    std::vector<Rational> c(a.coords_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coords_[k] - b.coords_[k];
    return Element(a.algebra_, std::move(c));
  }
  friend Element operator*(const Rational& s, const Element& a) {
    std::vector<Rational> c(a.coords_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.coords_[k];
    return Element(a.algebra_, std::move(c));
  }
  friend Element operator-(const Element& a) { return Rational(-1) * a; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }

  /// Human-readable linear combination, e.g. "m01 - 1/2*m12".
  std::string expression() const {
    std::string out;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (coords_[k].is_zero()) continue;
      if (!out.empty()) out += coords_[k].sign() > 0 ? " + " : " - ";
      else if (coords_[k].sign() < 0) out += "-";
      Rational a = coords_[k].abs();
      if (a != Rational(1)) out += a.str() + "*";
      out += algebra_->basis_labels()[k];
    }
    return out.empty() ? "0" : out;
  }

  static void check_same_algebra(const Element& a, const Element& b) {
    if (a.algebra_ != b.algebra_)
      throw std::invalid_argument("Element: operands belong to different Lie algebras");
  }

private:
  AlgebraPtr algebra_;
  std::vector<Rational> coords_;
};

/// Lie bracket [x, y]. Bilinear, antisymmetric, exact.
inline Element bracket(const Element& x, const Element& y) {
  Element::check_same_algebra(x, y);
  return Element(x.algebra(), x.algebra()->bracket_coords(x.coords(), y.coords()));
}

struct JacobiReport {
  bool ok = true;
  std::optional<std::tuple<int, int, int>> first_violation;
};

/// Checks [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0 for all
/// i < j < k. Report-style: never throws.
inline JacobiReport verify_jacobi(const LieAlgebra& a) {
  int n = a.dim();
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> bi(n);
    bi[i] = Rational(1);
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> bj(n);
      bj[j] = Rational(1);
      std::vector<Rational> cij = a.basis_bracket(i, j);
      for (int k = j + 1; k < n; ++k) {
        std::vector<Rational> bk(n);
        bk[k] = Rational(1);
        std::vector<Rational> s = a.bracket_coords(cij, bk);
        std::vector<Rational> t = a.bracket_coords(a.basis_bracket(j, k), bi);
        std::vector<Rational> u = a.bracket_coords(a.basis_bracket(k, i), bj);
        bool zero = true;
        for (int m = 0; m < n && zero; ++m) zero = (s[m] + t[m] + u[m]).is_zero();
        if (!zero) return {false, std::make_tuple(i, j, k)};
      }
    }
  }
  return {};
}

/// Linear subspace of a Lie algebra, stored as a reduced-echelon basis.
/// Canonical: two subspaces are equal iff their matrices are equal.
class Subspace {
public:
  Subspace(AlgebraPtr algebra, RatMatrix rref_rows)
      : algebra_(std::move(algebra)), rows_(std::move(rref_rows)) {}

  static Subspace zero(AlgebraPtr algebra) {
    RatMatrix m(0, algebra->dim());
    return Subspace(std::move(algebra), std::move(m));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const RatMatrix& basis_matrix() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.rows()); }

  Element basis_element(int i) const { return Element(algebra_, rows_.row(i)); }
  std::vector<Element> basis_elements() const {
    std::vector<Element> out;
    out.reserve(rows_.rows());
    for (std::size_t i = 0; i < rows_.rows(); ++i) out.push_back(basis_element(static_cast<int>(i)));
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.algebra_ == b.algebra_ && a.rows_ == b.rows_;
  }

private:
  AlgebraPtr algebra_;
  RatMatrix rows_;
};

/// Span of the given elements; zero vectors contribute nothing.
inline Subspace span_reduce(AlgebraPtr algebra, const std::vector<Element>& vectors) {
  RatMatrix m(0, algebra->dim());
  for (const Element& v : vectors) {
    if (v.algebra() != algebra) throw std::invalid_argument("span_reduce: element from a different algebra");
    m.append_row(v.coords());
  }
  return Subspace(algebra, row_space_basis(std::move(m)));
}

inline Subspace sum(const Subspace& s1, const Subspace& s2) {
  if (s1.algebra() != s2.algebra()) throw std::invalid_argument("sum: subspaces of different algebras");
  RatMatrix m = s1.basis_matrix();
  for (std::size_t i = 0; i < s2.basis_matrix().rows(); ++i) m.append_row(s2.basis_matrix().row(i));
  return Subspace(s1.algebra(), row_space_basis(std::move(m)));
}

/// Exact membership test (no tolerance).
inline bool contains(const Subspace& s, const Element& x) {
  if (s.algebra() != x.algebra()) throw std::invalid_argument("contains: element from a different algebra");
  RatMatrix m = s.basis_matrix();
  m.append_row(x.coords());
  return rank(std::move(m)) == static_cast<std::size_t>(s.dim());
}

/// Span of all pairwise brackets [u, v], u in s1, v in s2.
inline Subspace bracket_span(const Subspace& s1, const Subspace& s2) {
  if (s1.algebra() != s2.algebra()) throw std::invalid_argument("bracket_span: subspaces of different algebras");
  const AlgebraPtr& a = s1.algebra();
  RatMatrix m(0, a->dim());
  for (std::size_t i = 0; i < s1.basis_matrix().rows(); ++i)
    for (std::size_t j = 0; j < s2.basis_matrix().rows(); ++j)
      m.append_row(a->bracket_coords(s1.basis_matrix().row(i), s2.basis_matrix().row(j)));
  return Subspace(a, row_space_basis(std::move(m)));
}

/// Smallest subspace containing the seeds and closed under the bracket.
///
/// Each round brackets all basis pairs of the current echelon basis and
/// re-reduces; a round either grows the dimension or certifies closure,
/// so at most dim rounds of at most dim^2 bracket evaluations run.
inline Subspace lie_closure(AlgebraPtr algebra, const std::vector<Element>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("lie_closure: empty seed list");
  Subspace current = span_reduce(algebra, seeds);
  while (true) {
    const RatMatrix& basis = current.basis_matrix();
    RatMatrix candidate = basis;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = i + 1; j < basis.rows(); ++j)
        candidate.append_row(algebra->bracket_coords(basis.row(i), basis.row(j)));
    Subspace next(algebra, row_space_basis(std::move(candidate)));
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

}  // namespace liekms
