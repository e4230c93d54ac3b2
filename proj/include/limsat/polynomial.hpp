#pragma once
// Polynomials with terms kept sorted (descending) under the ring's order.

#include <map>
#include <optional>
#include <sstream>

#include "ring.hpp"

namespace limsat {

template <class K>
struct Term {
  Monomial m;
  K c;
};

template <class K>
class Polynomial {
public:
  RingPtr ring;
  std::vector<Term<K>> terms; // descending in ring->order, no zero coefficients

  Polynomial() = default;
  explicit Polynomial(RingPtr R) : ring(std::move(R)) {}
  Polynomial(RingPtr R, std::vector<Term<K>> ts) : ring(std::move(R)), terms(std::move(ts)) {
    normalize();
  }

  static Polynomial zero(RingPtr R) { return Polynomial(std::move(R)); }
  static Polynomial constant(RingPtr R, K c) {
    Polynomial p(R);
    if (!limsat::is_zero(c)) p.terms.push_back({Monomial(R->nvars()), std::move(c)});
    return p;
  }
  static Polynomial monomial(RingPtr R, Monomial m, K c) {
    Polynomial p(R);
    if (!limsat::is_zero(c)) p.terms.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Polynomial variable(RingPtr R, std::size_t j) {
    return monomial(R, R->var_monomial(j), scalar_from_long<K>(*R, 1));
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t nterms() const { return terms.size(); }

  const Term<K>& leading() const {
    if (terms.empty()) throw internal_error("leading term of zero");
    return terms.front();
  }
  const Monomial& lead_monomial() const { return leading().m; }
  const K& lead_coeff() const { return leading().c; }

  long total_degree() const {
    long d = -1;
    for (auto& t : terms) d = std::max(d, t.m.total_degree());
    return d;
  }

  // Multidegree if homogeneous (ignoring a parameter variable), else nullopt.
  // The zero polynomial reports nullopt as well.
  std::optional<Multidegree> multidegree() const {
    if (terms.empty()) return std::nullopt;
    Multidegree d = ring->degree(terms.front().m);
    for (auto& t : terms)
      if (ring->degree(t.m) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return terms.empty() || multidegree().has_value(); }

  void normalize() {
    std::map<std::vector<int>, K> acc;
    for (auto& t : terms) {
      auto it = acc.find(t.m.e);
      if (it == acc.end()) acc.emplace(t.m.e, t.c);
      else it->second += t.c;
    }
    terms.clear();
    for (auto& [e, c] : acc)
      if (!limsat::is_zero(c)) terms.push_back({Monomial(e), c});
    sort_terms();
  }

  void sort_terms() {
    std::stable_sort(terms.begin(), terms.end(), [&](const Term<K>& a, const Term<K>& b) {
      return cmp(a.m, b.m, ring->order) > 0;
    });
  }

  Polynomial resort(const RingPtr& view) const {
    Polynomial p(*this);
    p.ring = view;
    p.sort_terms();
    return p;
  }
  void resort() { sort_terms(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.ring ? a.ring : b.ring);
    r.terms = a.terms;
    for (auto& t : b.terms) r.terms.push_back(t);
    r.normalize();
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms) t.c = -t.c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.ring ? a.ring : b.ring);
    for (auto& s : a.terms)
      for (auto& t : b.terms) r.terms.push_back({s.m * t.m, s.c * t.c});
    r.normalize();
    return r;
  }
  friend Polynomial operator*(const K& c, const Polynomial& a) {
    Polynomial r(a);
    for (auto& t : r.terms) t.c = c * t.c;
    r.normalize();
    return r;
  }
  Polynomial mul_term(const Monomial& m, const K& c) const {
    Polynomial r(ring);
    if (limsat::is_zero(c)) return r;
    for (auto& t : terms) r.terms.push_back({t.m * m, t.c * c});
    // multiplying by a single term preserves the order of terms
    return r;
  }
  Polynomial monic() const {
    if (terms.empty()) return *this;
    return inverse(lead_coeff()) * *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (a.terms[i].m != b.terms[i].m || !(a.terms[i].c == b.terms[i].c)) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  K coeff(const Monomial& m) const {
    for (auto& t : terms)
      if (t.m == m) return t.c;
    return K(0);
  }

  // Substitute each variable by the given polynomial (images over any ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring->nvars()) throw internal_error("substitute arity mismatch");
    RingPtr target = images.empty() ? ring : images.front().ring;
    Polynomial acc = Polynomial::zero(target);
    for (auto& t : terms) {
      Polynomial part = Polynomial::constant(target, t.c);
      for (std::size_t j = 0; j < ring->nvars(); ++j)
        for (int k = 0; k < t.m.e[j]; ++k) part = part * images[j];
      acc = acc + part;
    }
    return acc;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms) {
      std::string cs = to_string(t.c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      bool unit_coeff = (cs == "1");
      bool wrote = false;
      if (!unit_coeff || t.m.is_one()) {
        os << cs;
        wrote = true;
      }
      for (std::size_t j = 0; j < ring->nvars(); ++j) {
        if (t.m.e[j] == 0) continue;
        if (wrote) os << "*";
        os << ring->vars[j];
        if (t.m.e[j] > 1) os << "^" << t.m.e[j];
        wrote = true;
      }
    }
    return os.str();
  }
};

// All monomials of the ring with the given multidegree, listed descending in
// the ring's order. Finite because no non-parameter variable has degree 0;
// parameter variables are excluded.
inline std::vector<Monomial> monomials_of_degree(const GradedRing& R, const Multidegree& d) {
  std::vector<Monomial> out;
  Monomial cur(R.nvars());
  Multidegree rem = d;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == R.nvars()) {
      for (long v : rem)
        if (v != 0) return;
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(j) == R.param) { self(self, j + 1); return; }
    // max exponent for variable j limited by remaining degree budget
    int emax = -1;
    for (std::size_t r = 0; r < R.grading.size(); ++r) {
      if (R.grading[r][j] == 0) continue;
      long cap = rem[r] / R.grading[r][j];
      emax = emax < 0 ? static_cast<int>(cap) : std::min(emax, static_cast<int>(cap));
    }
    if (emax < 0) throw internal_error("variable with zero multidegree");
    for (int e = 0; e <= emax; ++e) {
      bool ok = true;
      for (std::size_t r = 0; r < R.grading.size(); ++r)
        if (rem[r] < e * R.grading[r][j]) { ok = false; break; }
      if (!ok) break;
      cur.e[j] = e;
      for (std::size_t r = 0; r < R.grading.size(); ++r) rem[r] -= e * R.grading[r][j];
      self(self, j + 1);
      for (std::size_t r = 0; r < R.grading.size(); ++r) rem[r] += e * R.grading[r][j];
      cur.e[j] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return cmp(a, b, R.order) > 0;
  });
  return out;
}

inline std::vector<Monomial> monomials_of_degree(const GradedRing& R, long d) {
  return monomials_of_degree(R, Multidegree{d});
}

} // namespace limsat
