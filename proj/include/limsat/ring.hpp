#pragma once
// Multigraded polynomial ring descriptions and monomial orders.
//
// A ring is a list of variable names plus an r x n grading matrix with
// nonnegative entries; every variable must have a nonzero multidegree column.
// Rings are immutable and shared; the monomial order travels with the ring so
// polynomials know how their terms are sorted.

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace limsat {

using Multidegree = std::vector<long>;

struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  long total_degree() const { return std::accumulate(e.begin(), e.end(), 0L); }
  bool is_one() const { return total_degree() == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  bool divides(const Monomial& b) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      r.e[i] = a.e[i] - b.e[i];
      if (r.e[i] < 0) throw internal_error("monomial division not exact");
    }
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
};

enum class OrderKind { Grevlex, Lex, Block };

// Block: the first `split` variables form the elimination block; monomials are
// compared grevlex on that block first, then grevlex on the remainder.
struct Order {
  OrderKind kind = OrderKind::Grevlex;
  int split = 0;

  static Order grevlex() { return {OrderKind::Grevlex, 0}; }
  static Order lex() { return {OrderKind::Lex, 0}; }
  static Order block(int split) { return {OrderKind::Block, split}; }
  friend bool operator==(const Order& a, const Order& b) {
    return a.kind == b.kind && a.split == b.split;
  }
};

namespace detail {
// grevlex on the index window [lo, hi): larger total degree wins, ties broken
// by the smaller exponent in the last differing (lowest-priority) variable.
inline int cmp_grevlex_window(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}
} // namespace detail

// Returns -1 / 0 / +1 for a < b / a == b / a > b. Variable 0 has the highest
// priority throughout.
inline int cmp(const Monomial& a, const Monomial& b, const Order& o) {
  const std::size_t n = a.e.size();
  switch (o.kind) {
    case OrderKind::Grevlex:
      return detail::cmp_grevlex_window(a, b, 0, n);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::Block: {
      int c = detail::cmp_grevlex_window(a, b, 0, static_cast<std::size_t>(o.split));
      if (c != 0) return c;
      return detail::cmp_grevlex_window(a, b, static_cast<std::size_t>(o.split), n);
    }
  }
  return 0;
}

struct GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

struct GradedRing {
  std::vector<std::string> vars;
  std::vector<std::vector<long>> grading; // r rows, one column per variable
  std::uint32_t characteristic = 0;       // 0 or an odd prime
  Order order = Order::grevlex();
  int param = -1; // index of a degree-0 parameter variable, or -1

  std::size_t nvars() const { return vars.size(); }
  std::size_t grading_rank() const { return grading.size(); }
  bool has_param() const { return param >= 0; }

  bool standard_graded() const {
    if (grading.size() != 1) return false;
    for (std::size_t j = 0; j < nvars(); ++j)
      if (static_cast<int>(j) != param && grading[0][j] != 1) return false;
    return true;
  }

  Multidegree degree(const Monomial& m) const {
    Multidegree d(grading.size(), 0);
    for (std::size_t r = 0; r < grading.size(); ++r)
      for (std::size_t j = 0; j < nvars(); ++j) d[r] += grading[r][j] * m.e[j];
    return d;
  }

  int var_index(const std::string& name) const {
    for (std::size_t j = 0; j < nvars(); ++j)
      if (vars[j] == name) return static_cast<int>(j);
    return -1;
  }

  Monomial var_monomial(std::size_t j) const {
    Monomial m(nvars());
    m.e[j] = 1;
    return m;
  }

  void validate() const {
    if (vars.empty()) throw input_error("ring needs at least one variable");
    if (grading.empty()) throw input_error("grading needs at least one row");
    for (auto& row : grading) {
      if (row.size() != nvars()) throw input_error("grading row width mismatch");
      for (long w : row)
        if (w < 0) throw input_error("grading weights must be nonnegative");
    }
    for (std::size_t j = 0; j < nvars(); ++j) {
      if (static_cast<int>(j) == param) continue;
      long s = 0;
      for (auto& row : grading) s += row[j];
      if (s == 0) throw input_error("variable " + vars[j] + " has zero multidegree");
    }
    if (characteristic != 0 && !is_prime_u32(characteristic))
      throw input_error("characteristic must be 0 or prime");
    for (std::size_t i = 0; i < nvars(); ++i)
      for (std::size_t j = i + 1; j < nvars(); ++j)
        if (vars[i] == vars[j]) throw input_error("duplicate variable " + vars[i]);
  }
};

inline RingPtr make_ring(std::vector<std::string> vars,
                         std::vector<std::vector<long>> grading,
                         std::uint32_t characteristic = 0,
                         Order order = Order::grevlex()) {
  auto r = std::make_shared<GradedRing>();
  r->vars = std::move(vars);
  r->grading = std::move(grading);
  r->characteristic = characteristic;
  r->order = order;
  r->validate();
  return r;
}

inline RingPtr standard_ring(std::vector<std::string> vars, std::uint32_t characteristic = 0,
                             Order order = Order::grevlex()) {
  std::vector<std::vector<long>> g{std::vector<long>(vars.size(), 1)};
  return make_ring(std::move(vars), std::move(g), characteristic, order);
}

inline RingPtr with_order(const RingPtr& R, Order o) {
  if (R->order == o) return R;
  auto r = std::make_shared<GradedRing>(*R);
  r->order = o;
  return r;
}

// Same underlying graded ring, possibly under different orders.
inline bool same_ring(const GradedRing& a, const GradedRing& b) {
  return a.vars == b.vars && a.grading == b.grading &&
         a.characteristic == b.characteristic && a.param == b.param;
}

// Dual ring: variables x0..xn carrying the contraction side of the apolarity
// pairing. Shares grading and characteristic.
inline RingPtr dual_ring(const RingPtr& R) {
  std::vector<std::string> xs;
  for (std::size_t j = 0; j < R->nvars(); ++j) xs.push_back("x" + std::to_string(j));
  return make_ring(xs, R->grading, R->characteristic, R->order);
}

// Ring extended by a trailing degree-0 parameter variable.
inline RingPtr param_ring(const RingPtr& R, const std::string& tname = "t") {
  auto r = std::make_shared<GradedRing>(*R);
  r->vars.push_back(tname);
  for (auto& row : r->grading) row.push_back(0);
  r->param = static_cast<int>(r->vars.size()) - 1;
  r->validate();
  return r;
}

template <class K> inline K scalar_from_long(const GradedRing&, long n);
template <> inline Rat scalar_from_long<Rat>(const GradedRing& R, long n) {
  if (R.characteristic != 0) throw internal_error("rational scalars need characteristic 0");
  return Rat(n);
}
template <> inline GF scalar_from_long<GF>(const GradedRing& R, long n) {
  if (R.characteristic == 0) throw internal_error("prime-field scalars need positive characteristic");
  return GF(n, R.characteristic);
}

template <class K> inline K scalar_from_decimal(const GradedRing& R, const std::string& digits);
template <> inline Rat scalar_from_decimal<Rat>(const GradedRing&, const std::string& digits) {
  return Rat(mpz_class(digits));
}
template <> inline GF scalar_from_decimal<GF>(const GradedRing& R, const std::string& digits) {
  std::uint64_t v = 0;
  for (char c : digits) v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % R.characteristic;
  return GF(static_cast<std::int64_t>(v), R.characteristic);
}

template <class K> inline void check_field(const GradedRing& R);
template <> inline void check_field<Rat>(const GradedRing& R) {
  if (R.characteristic != 0) throw internal_error("field/ring characteristic mismatch");
}
template <> inline void check_field<GF>(const GradedRing& R) {
  if (R.characteristic == 0) throw internal_error("field/ring characteristic mismatch");
}

} // namespace limsat
