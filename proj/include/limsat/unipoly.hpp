#pragma once
// Univariate polynomials in a deformation parameter t, and row modules over
// k[t]: echelon form, t-saturation, kernels, fraction-free determinants.

#include "linalg.hpp"

namespace limsat {

template <class K>
struct UniPoly {
  std::vector<K> c; // c[i] is the coefficient of t^i; trailing zeros trimmed

  UniPoly() = default;
  explicit UniPoly(K k) { if (!is_zero(k)) c.push_back(k); }
  static UniPoly t_power(std::size_t k, K coeff = K(1)) {
    UniPoly p;
    if (!is_zero(coeff)) { p.c.assign(k + 1, K(0)); p.c[k] = coeff; }
    return p;
  }

  void trim() { while (!c.empty() && is_zero(c.back())) c.pop_back(); }
  bool zero() const { return c.empty(); }
  long degree() const { return c.empty() ? -1 : (long)c.size() - 1; }
  long valuation() const { // order of vanishing at t = 0; -1 for the zero poly
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i])) return (long)i;
    return -1;
  }
  K lead() const { return c.empty() ? K(0) : c.back(); }
  K at0() const { return c.empty() ? K(0) : c[0]; }
  K eval(const K& x) const {
    K r(0);
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.zero() || b.zero()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend UniPoly operator*(const K& s, const UniPoly& b) {
    UniPoly r = b;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }

  UniPoly shifted_down(long k) const { // exact division by t^k
    if (zero()) return {};
    if (valuation() < k) throw internal_error("inexact division by t power");
    UniPoly r;
    r.c.assign(c.begin() + k, c.end());
    return r;
  }

  std::string str(const std::string& var = "t") const {
    if (zero()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (is_zero(c[i])) continue;
      std::string cs = to_string(c[i]);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (out.empty()) { if (neg) out += "-"; }
      else out += neg ? " - " : " + ";
      bool unit = cs == "1";
      if (i == 0) out += cs;
      else {
        if (!unit) out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }
};

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.zero()) throw internal_error("division by zero polynomial");
  UniPoly<K> q, r = a;
  K binv = inverse(b.lead());
  while (!r.zero() && r.degree() >= b.degree()) {
    long k = r.degree() - b.degree();
    K f = r.lead() * binv;
    UniPoly<K> m = UniPoly<K>::t_power((std::size_t)k, f);
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw internal_error("inexact polynomial division");
  return q;
}

// Rows over k[t] against a fixed column count.
template <class K>
using TRow = std::vector<UniPoly<K>>;
template <class K>
using TMat = std::vector<TRow<K>>;

template <class K>
bool row_zero(const TRow<K>& r) {
  for (auto& e : r)
    if (!e.zero()) return false;
  return true;
}

// Row echelon form over k[t]. Row operations are invertible over k[t]
// (swaps, unit scalings, adding polynomial multiples), so the row module is
// preserved. Zero rows are dropped. Returns pivot columns.
template <class K>
std::vector<std::size_t> tmat_echelon(TMat<K>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    // Euclidean algorithm down the column until one nonzero entry remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = row; i < m.size(); ++i)
        if (!m[i][col].zero() &&
            (best == m.size() || m[i][col].degree() < m[best][col].degree()))
          best = i;
      if (best == m.size()) break; // column clear below
      if (best != row) std::swap(m[best], m[row]);
      bool again = false;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][col].zero()) continue;
        auto [q, r] = divmod(m[i][col], m[row][col]);
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - q * m[row][j];
        if (!r.zero()) again = true;
      }
      if (!again) {
        K u = inverse(m[row][col].lead());
        for (std::size_t j = 0; j < cols; ++j) m[row][j] = u * m[row][j];
        pivots.push_back(col);
        ++row;
        break;
      }
    }
  }
  m.erase(std::remove_if(m.begin() + row, m.end(),
                         [](const TRow<K>& r) { return row_zero(r); }),
          m.end());
  for (std::size_t i = row; i < m.size(); ++i)
    if (!row_zero(m[i])) throw internal_error("echelon left a nonzero row");
  m.resize(row);
  return pivots;
}

template <class K>
Mat<K> tmat_eval(const TMat<K>& m, const K& x) {
  Mat<K> r(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r.at(i, j) = m[i][j].eval(x);
  return r;
}

template <class K>
Mat<K> tmat_at0(const TMat<K>& m) {
  Mat<K> r(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r.at(i, j) = m[i][j].at0();
  return r;
}

// Saturate the row module with respect to t: enlarge until dividing any
// module element by t leaves the module. After echelonizing, the rows are
// independent over k(t); the module is saturated exactly when the rows stay
// independent at t = 0. Each enlargement strictly grows the module inside
// its saturation, which has finite length over it, so the loop terminates.
template <class K>
void tmat_saturate(TMat<K>& m) {
  tmat_echelon(m);
  while (true) {
    Mat<K> ev = tmat_at0(m);
    auto ker = kernel_basis(transpose_rows(ev));
    if (ker.empty()) return;
    const auto& lam = ker[0];
    std::size_t cols = m[0].size();
    TRow<K> v(cols);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!is_zero(lam[i]))
        for (std::size_t j = 0; j < cols; ++j) v[j] = v[j] + lam[i] * m[i][j];
    long val = -1;
    for (auto& e : v)
      if (!e.zero()) {
        long w = e.valuation();
        if (val < 0 || w < val) val = w;
      }
    if (val < 1) throw internal_error("saturation found a unit-valuation relation");
    for (auto& e : v) e = e.zero() ? e : e.shifted_down(val);
    std::size_t repl = 0;
    while (is_zero(lam[repl])) ++repl;
    m[repl] = std::move(v);
    tmat_echelon(m);
  }
}

template <class K>
TMat<K> tmat_transpose(const TMat<K>& m) {
  if (m.empty()) return {};
  TMat<K> r(m[0].size(), TRow<K>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

// Basis of {x in k[t]^n : x * B = 0} for an n-row matrix B. Echelonize the
// block [B | I]; rows whose B block vanished carry the kernel in the I block.
// The kernel of a k[t]-matrix is t-saturated, and a k[t]-basis of it stays
// independent at t = 0, so no separate saturation pass is needed.
template <class K>
TMat<K> tmat_left_kernel(const TMat<K>& B) {
  if (B.empty()) return {};
  std::size_t n = B.size(), p = B[0].size();
  TMat<K> aug(n, TRow<K>(p + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) aug[i][j] = B[i][j];
    aug[i][p + i] = UniPoly<K>(K(1));
  }
  // Echelonize only over the first p columns, keeping every row.
  std::size_t row = 0;
  for (std::size_t col = 0; col < p && row < n; ++col) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = row; i < n; ++i)
        if (!aug[i][col].zero() &&
            (best == n || aug[i][col].degree() < aug[best][col].degree()))
          best = i;
      if (best == n) break;
      if (best != row) std::swap(aug[best], aug[row]);
      bool again = false;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (aug[i][col].zero()) continue;
        auto [q, r] = divmod(aug[i][col], aug[row][col]);
        for (std::size_t j = 0; j < p + n; ++j) aug[i][j] = aug[i][j] - q * aug[row][j];
        if (!r.zero()) again = true;
      }
      if (!again) { ++row; break; }
    }
  }
  TMat<K> ker;
  for (std::size_t i = row; i < n; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < p; ++j)
      if (!aug[i][j].zero()) { zero = false; break; }
    if (!zero) throw internal_error("left kernel row not cleared");
    ker.emplace_back(aug[i].begin() + p, aug[i].end());
  }
  return ker;
}

// Basis of {x in k[t]^cols : A x = 0} with A given by rows.
template <class K>
TMat<K> tmat_right_kernel(const TMat<K>& A) {
  return tmat_left_kernel(tmat_transpose(A));
}

// Fraction-free determinant (Bareiss), exact over k[t].
template <class K>
UniPoly<K> tmat_det(TMat<K> m) {
  std::size_t n = m.size();
  if (n == 0) return UniPoly<K>(K(1));
  for (auto& r : m)
    if (r.size() != n) throw internal_error("determinant of a non-square matrix");
  UniPoly<K> prev(K(1));
  K sign(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].zero()) ++s;
      if (s == n) return {};
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

} // namespace limsat
