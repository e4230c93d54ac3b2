#pragma once
// Dense exact linear algebra over a field, plus degreewise subspaces of
// polynomials represented as reduced row-echelon matrices over a fixed
// monomial basis.

#include "polynomial.hpp"

namespace limsat {

template <class K>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, K(0)) {}
  K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class K>
std::vector<std::size_t> rref(Mat<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    K inv = inverse(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = inv * m.at(row, j);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      K f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
std::size_t rank(Mat<K> m) { return rref(m).size(); }

template <class K>
Mat<K> transpose_rows(const Mat<K>& m) {
  Mat<K> r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

// Basis of the right kernel {x : Mx = 0}, echelonized over the free columns.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols, K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

// A subspace of the span of a fixed monomial list, stored as RREF rows.
// The monomial list must be descending in the ring order so canonical bases
// and deterministic representative choices fall out of the echelon form.
template <class K>
struct Subspace {
  RingPtr ring;
  std::vector<Monomial> basis; // column labels
  Mat<K> rr;                   // RREF, one row per basis vector
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return rr.rows; }

  Polynomial<K> row_poly(std::size_t i) const {
    Polynomial<K> p(ring);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!is_zero(rr.at(i, j))) p.terms.push_back({basis[j], rr.at(i, j)});
    p.normalize();
    return p;
  }
  std::vector<Polynomial<K>> basis_polys() const {
    std::vector<Polynomial<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(row_poly(i));
    return out;
  }

  std::vector<K> coords(const Polynomial<K>& p) const {
    std::vector<K> v(basis.size(), K(0));
    for (auto& t : p.terms) {
      bool found = false;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (basis[j] == t.m) { v[j] = t.c; found = true; break; }
      if (!found) throw internal_error("monomial outside subspace basis");
    }
    return v;
  }

  // Reduce v against the echelon rows; zero residual means membership.
  std::vector<K> residual(std::vector<K> v) const {
    for (std::size_t r = 0; r < rr.rows; ++r) {
      const K& c = v[pivots[r]];
      if (is_zero(c)) continue;
      K f = c;
      for (std::size_t j = 0; j < basis.size(); ++j) v[j] -= f * rr.at(r, j);
    }
    return v;
  }
  bool contains(const Polynomial<K>& p) const {
    auto res = residual(coords(p));
    for (auto& c : res)
      if (!is_zero(c)) return false;
    return true;
  }
  bool contains_all(const std::vector<Polynomial<K>>& ps) const {
    for (auto& p : ps)
      if (!contains(p)) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.basis != b.basis || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.rr.rows; ++i)
      for (std::size_t j = 0; j < a.rr.cols; ++j)
        if (!(a.rr.at(i, j) == b.rr.at(i, j))) return false;
    return true;
  }
};

template <class K>
Subspace<K> span_subspace(const RingPtr& ring, std::vector<Monomial> basis,
                          const std::vector<Polynomial<K>>& gens) {
  Subspace<K> S;
  S.ring = ring;
  S.basis = std::move(basis);
  Mat<K> m(gens.size(), S.basis.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto& t : gens[i].terms) {
      bool found = false;
      for (std::size_t j = 0; j < S.basis.size(); ++j)
        if (S.basis[j] == t.m) { m.at(i, j) = t.c; found = true; break; }
      if (!found) throw internal_error("generator outside subspace basis");
    }
  }
  auto piv = rref(m);
  S.rr = Mat<K>(piv.size(), S.basis.size());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < S.basis.size(); ++j) S.rr.at(i, j) = m.at(i, j);
  S.pivots = piv;
  return S;
}

// Span inside the full degree-d piece of the ring.
template <class K>
Subspace<K> degree_span(const RingPtr& ring, const Multidegree& d,
                        const std::vector<Polynomial<K>>& gens) {
  return span_subspace(ring, monomials_of_degree(*ring, d), gens);
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& A, const Subspace<K>& B) {
  auto gens = A.basis_polys();
  for (auto& p : B.basis_polys()) gens.push_back(p);
  return span_subspace(A.ring, A.basis, gens);
}

} // namespace limsat
