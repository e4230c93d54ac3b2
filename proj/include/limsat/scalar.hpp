#pragma once
// Exact coefficient fields: arbitrary-precision rationals and odd prime fields.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace limsat {

struct error : std::runtime_error {
  std::string code;
  error(std::string c, const std::string& what) : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

inline error input_error(const std::string& what) { return error("InputError", what); }
inline error internal_error(const std::string& what) { return error("InternalError", what); }

// Rationals. mpq_class keeps itself canonical under arithmetic; construction
// from raw num/den must canonicalize explicitly.
using Rat = mpq_class;

inline Rat rat_of(long n) { return Rat(n); }
inline Rat rat_of(long n, long d) {
  if (d == 0) throw input_error("zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline Rat inverse(const Rat& a) {
  if (is_zero(a)) throw internal_error("inverse of zero");
  return 1 / a;
}
inline std::string to_string(const Rat& a) { return a.get_str(); }

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime-field element carrying its modulus. A default modulus of 0 marks an
// integer literal that adopts the modulus of the first reduced operand it
// meets; generic code can then write K(0), K(1) without a field handle.
struct GF {
  std::int64_t raw = 0;    // meaningful when p == 0
  std::uint64_t v = 0;     // reduced value when p != 0
  std::uint32_t p = 0;

  GF() = default;
  GF(long n) : raw(n) {}
  GF(std::int64_t n, std::uint32_t mod) : p(mod) { v = reduce(n, mod); }

  static std::uint64_t reduce(std::int64_t n, std::uint32_t mod) {
    std::int64_t r = n % static_cast<std::int64_t>(mod);
    if (r < 0) r += mod;
    return static_cast<std::uint64_t>(r);
  }
  bool literal() const { return p == 0; }
  GF lift(std::uint32_t mod) const { return literal() ? GF(raw, mod) : *this; }

  friend std::uint32_t common_mod(const GF& a, const GF& b) {
    if (a.p && b.p && a.p != b.p) throw internal_error("mixed moduli");
    return a.p ? a.p : b.p;
  }
  friend GF operator+(const GF& a, const GF& b) {
    std::uint32_t m = common_mod(a, b);
    if (!m) return GF(a.raw + b.raw);
    return GF(static_cast<std::int64_t>((a.lift(m).v + b.lift(m).v) % m), m);
  }
  friend GF operator-(const GF& a, const GF& b) {
    std::uint32_t m = common_mod(a, b);
    if (!m) return GF(a.raw - b.raw);
    return GF(static_cast<std::int64_t>((a.lift(m).v + m - b.lift(m).v) % m), m);
  }
  GF operator-() const { return p ? GF(-static_cast<std::int64_t>(v), p) : GF(-raw); }
  friend GF operator*(const GF& a, const GF& b) {
    std::uint32_t m = common_mod(a, b);
    if (!m) return GF(a.raw * b.raw);
    return GF(static_cast<std::int64_t>((a.lift(m).v * b.lift(m).v) % m), m);
  }
  friend GF operator/(const GF& a, const GF& b);
  GF& operator+=(const GF& b) { return *this = *this + b; }
  GF& operator-=(const GF& b) { return *this = *this - b; }
  GF& operator*=(const GF& b) { return *this = *this * b; }
  friend bool operator==(const GF& a, const GF& b) {
    std::uint32_t m = common_mod(a, b);
    if (!m) return a.raw == b.raw;
    return a.lift(m).v == b.lift(m).v;
  }
  friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }
};

inline bool is_zero(const GF& a) { return a.p ? a.v == 0 : a.raw == 0; }

inline GF inverse(const GF& a) {
  if (is_zero(a)) throw internal_error("inverse of zero");
  if (!a.p) {
    if (a.raw == 1) return GF(1);
    if (a.raw == -1) return GF(-1);
    throw internal_error("inverse of modulus-free literal");
  }
  // extended Euclid on (v, p)
  std::int64_t t = 0, nt = 1, r = a.p, nr = static_cast<std::int64_t>(a.v);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  return GF(t, a.p);
}

inline GF operator/(const GF& a, const GF& b) { return a * inverse(b.p || !a.p ? b : b.lift(a.p)); }

inline std::string to_string(const GF& a) {
  return a.p ? std::to_string(a.v) : std::to_string(a.raw);
}

} // namespace limsat
