#pragma once
// Ideals with cached bases: sum, product, intersection, colon, saturation
// with respect to the irrelevant ideal, minimal generators, degree pieces.

#include <random>

#include "groebner.hpp"
#include "linalg.hpp"

namespace limsat {

template <class K>
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial<K>> gens;
  mutable std::shared_ptr<GrobnerBasis<K>> cache;

  Ideal() = default;
  Ideal(RingPtr r, std::vector<Polynomial<K>> g) : ring(std::move(r)), gens(std::move(g)) {}

  const GrobnerBasis<K>& gb() const {
    if (!cache) cache = std::make_shared<GrobnerBasis<K>>(groebner(ring, gens));
    return *cache;
  }
  bool contains(const Polynomial<K>& f) const { return reduces_to_zero(f, gb()); }
  bool contains(const Ideal& other) const {
    for (auto& g : other.gens)
      if (!contains(g)) return false;
    return true;
  }
  bool is_zero() const { return gb().basis.empty(); }
  bool is_unit() const {
    return gb().basis.size() == 1 && gb().basis[0].lead_monomial().is_one();
  }
  bool is_homogeneous() const {
    for (auto& g : gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    if (!same_ring(*a.ring, *b.ring)) return false;
    if (a.ring->order == b.ring->order) return a.gb().basis == b.gb().basis;
    GrobnerBasis<K> rb = groebner(a.ring, [&] {
      std::vector<Polynomial<K>> moved;
      for (auto& g : b.gens) { auto h = g; h.ring = a.ring; h.resort(); moved.push_back(h); }
      return moved;
    }());
    return a.gb().basis == rb.basis;
  }
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  auto g = a.gens;
  for (auto& f : b.gens) g.push_back(f);
  return {a.ring, std::move(g)};
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Polynomial<K>> g;
  for (auto& f : a.gens)
    for (auto& h : b.gens) g.push_back(f * h);
  if (g.empty()) g.push_back(Polynomial<K>::zero(a.ring));
  return {a.ring, std::move(g)};
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, unsigned k) {
  if (k == 0) return {a.ring, {Polynomial<K>::constant(a.ring, K(1))}};
  Ideal<K> r = a;
  for (unsigned i = 1; i < k; ++i) r = ideal_product(r, a);
  return r;
}

namespace detail {

// Ring with one auxiliary variable in front, under an elimination order.
inline RingPtr aux_ring(const GradedRing& R) {
  if (R.has_param()) throw internal_error("auxiliary constructions need a plain ring");
  std::string w = "_w";
  while (R.var_index(w) >= 0) w += "_";
  std::vector<std::string> vars{w};
  vars.insert(vars.end(), R.vars.begin(), R.vars.end());
  std::vector<std::vector<long>> grading(R.grading.size());
  for (std::size_t r = 0; r < R.grading.size(); ++r) {
    grading[r].push_back(1);
    for (auto d : R.grading[r]) grading[r].push_back(d);
  }
  return make_ring(vars, grading, R.characteristic, Order::block(1));
}

template <class K>
Polynomial<K> shift_in(const Polynomial<K>& f, const RingPtr& ext) {
  Polynomial<K> g(ext);
  for (auto& t : f.terms) {
    Monomial m;
    m.e.push_back(0);
    m.e.insert(m.e.end(), t.m.e.begin(), t.m.e.end());
    g.terms.push_back({std::move(m), t.c});
  }
  g.resort();
  return g;
}

template <class K>
Polynomial<K> shift_out(const Polynomial<K>& f, const RingPtr& base) {
  Polynomial<K> g(base);
  for (auto& t : f.terms) {
    if (t.m.e.empty() || t.m.e[0] != 0)
      throw internal_error("eliminated variable survived");
    Monomial m;
    m.e.assign(t.m.e.begin() + 1, t.m.e.end());
    g.terms.push_back({std::move(m), t.c});
  }
  g.resort();
  return g;
}

} // namespace detail

// Intersection via a single auxiliary variable: eliminate w from
// w*I + (1-w)*J. Elements of the elimination-order basis whose lead avoids w
// avoid it entirely.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b) {
  RingPtr ext = detail::aux_ring(*a.ring);
  Polynomial<K> w = Polynomial<K>::variable(ext, 0);
  Polynomial<K> omw = Polynomial<K>::constant(ext, K(1)) - w;
  std::vector<Polynomial<K>> gens;
  for (auto& f : a.gens) gens.push_back(w * detail::shift_in(f, ext));
  for (auto& f : b.gens) gens.push_back(omw * detail::shift_in(f, ext));
  GrobnerBasis<K> gb = groebner(ext, gens);
  std::vector<Polynomial<K>> out;
  for (auto& g : gb.basis)
    if (g.lead_monomial().e[0] == 0) out.push_back(detail::shift_out(g, a.ring));
  if (out.empty()) out.push_back(Polynomial<K>::zero(a.ring));
  return {a.ring, std::move(out)};
}

// Eliminate the named variables: compute a basis under a block order with
// those variables in front, keep the elements free of them, and land in the
// ring on the remaining variables.
template <class K>
Ideal<K> eliminate(const Ideal<K>& a, const std::vector<std::string>& drop) {
  const GradedRing& R = *a.ring;
  if (R.has_param()) throw internal_error("elimination needs a plain ring");
  std::vector<std::size_t> dropped, kept;
  for (auto& name : drop) {
    int j = R.var_index(name);
    if (j < 0) throw input_error("unknown variable " + name);
    if (std::find(dropped.begin(), dropped.end(), (std::size_t)j) != dropped.end())
      throw input_error("variable listed twice: " + name);
    dropped.push_back((std::size_t)j);
  }
  for (std::size_t j = 0; j < R.nvars(); ++j)
    if (std::find(dropped.begin(), dropped.end(), j) == dropped.end()) kept.push_back(j);
  if (kept.empty()) throw input_error("cannot eliminate every variable");
  std::vector<std::size_t> perm = dropped;
  perm.insert(perm.end(), kept.begin(), kept.end());

  std::vector<std::string> evars;
  std::vector<std::vector<long>> egrad(R.grading.size());
  for (auto j : perm) {
    evars.push_back(R.vars[j]);
    for (std::size_t r = 0; r < R.grading.size(); ++r) egrad[r].push_back(R.grading[r][j]);
  }
  RingPtr ext = make_ring(evars, egrad, R.characteristic, Order::block((int)dropped.size()));
  std::vector<Polynomial<K>> mapped;
  for (auto& f : a.gens) {
    Polynomial<K> g(ext);
    for (auto& t : f.terms) {
      Monomial m(perm.size());
      for (std::size_t j = 0; j < perm.size(); ++j) m.e[j] = t.m.e[perm[j]];
      g.terms.push_back({std::move(m), t.c});
    }
    g.resort();
    mapped.push_back(std::move(g));
  }
  GrobnerBasis<K> gb = groebner(ext, mapped);

  std::vector<std::string> rvars;
  std::vector<std::vector<long>> rgrad(R.grading.size());
  for (auto j : kept) {
    rvars.push_back(R.vars[j]);
    for (std::size_t r = 0; r < R.grading.size(); ++r) rgrad[r].push_back(R.grading[r][j]);
  }
  RingPtr small = make_ring(rvars, rgrad, R.characteristic);
  std::vector<Polynomial<K>> out;
  for (auto& g : gb.basis) {
    bool free = true;
    for (std::size_t j = 0; j < dropped.size() && free; ++j)
      if (g.lead_monomial().e[j] != 0) free = false;
    if (!free) continue;
    Polynomial<K> h(small);
    for (auto& t : g.terms) {
      for (std::size_t j = 0; j < dropped.size(); ++j)
        if (t.m.e[j] != 0) throw internal_error("eliminated variable survived");
      Monomial m(kept.size());
      for (std::size_t j = 0; j < kept.size(); ++j) m.e[j] = t.m.e[dropped.size() + j];
      h.terms.push_back({std::move(m), t.c});
    }
    h.resort();
    out.push_back(std::move(h));
  }
  if (out.empty()) out.push_back(Polynomial<K>::zero(small));
  return {small, std::move(out)};
}

template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& f, const Polynomial<K>& g) {
  Division<K> d = divide(f, std::vector<Polynomial<K>>{g});
  if (!d.remainder.is_zero()) throw internal_error("inexact polynomial quotient");
  return d.quotients[0];
}

// (I : f), computed as (I intersect (f)) / f.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Polynomial<K>& f) {
  if (f.is_zero()) throw internal_error("colon by zero");
  Ideal<K> fi{a.ring, {f}};
  Ideal<K> cap = ideal_intersect(a, fi);
  std::vector<Polynomial<K>> out;
  for (auto& g : cap.gens)
    if (!g.is_zero()) out.push_back(exact_quotient(g, f));
  if (out.empty()) out.push_back(Polynomial<K>::zero(a.ring));
  return {a.ring, std::move(out)};
}

// (I : J) as the intersection of the colons by the generators of J.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& a, const Ideal<K>& b) {
  bool first = true;
  Ideal<K> acc;
  for (auto& g : b.gens) {
    if (g.is_zero()) continue;
    Ideal<K> c = ideal_colon(a, g);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  if (first) throw internal_error("colon by the zero ideal");
  return acc;
}

// (I : f^infinity) by iterating single colons to a fixed point.
template <class K>
Ideal<K> colon_power_limit(const Ideal<K>& a, const Polynomial<K>& f) {
  Ideal<K> cur = a;
  while (true) {
    Ideal<K> next = ideal_colon(cur, f);
    if (next == cur) return cur;
    cur = next;
  }
}

// Squarefree minimal monomials whose multidegree is positive in every
// grading row. With one grading row of positive weights this is just the
// variables.
inline std::vector<Monomial> irrelevant_monomials(const GradedRing& R) {
  std::size_t n = R.nvars();
  std::vector<Monomial> found;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    if (R.has_param() && (mask >> (std::size_t)R.param) & 1) continue;
    Monomial m;
    m.e.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) m.e[i] = 1;
    Multidegree d = R.degree(m);
    bool pos = true;
    for (auto x : d)
      if (x <= 0) { pos = false; break; }
    if (!pos) continue;
    bool minimal = true;
    for (auto& prev : found)
      if (prev.divides(m)) { minimal = false; break; }
    if (minimal) found.push_back(std::move(m));
  }
  if (found.empty()) throw input_error("ring has no monomial of positive multidegree");
  return found;
}

// Saturation with respect to the irrelevant ideal: intersect the saturations
// by each of its (squarefree monomial) generators.
template <class K>
Ideal<K> saturate(const Ideal<K>& a) {
  auto mons = irrelevant_monomials(*a.ring);
  bool first = true;
  Ideal<K> acc;
  for (auto& m : mons) {
    Polynomial<K> f = Polynomial<K>::monomial(a.ring, m, K(1));
    Ideal<K> c = colon_power_limit(a, f);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  return acc;
}

template <class K>
bool is_saturated(const Ideal<K>& a) {
  return saturate(a) == a;
}

template <class K>
bool is_nonzerodivisor(const Polynomial<K>& f, const Ideal<K>& a) {
  return ideal_colon(a, f) == a;
}

// Degree-d piece of a homogeneous ideal as a subspace of the ring's degree-d
// slice, spanned by monomial multiples of the generators.
template <class K>
Subspace<K> ideal_piece(const Ideal<K>& a, const Multidegree& d) {
  std::vector<Polynomial<K>> span;
  for (auto& g : a.gens) {
    if (g.is_zero()) continue;
    auto e = g.multidegree();
    if (!e) throw input_error("degree piece of an inhomogeneous ideal");
    Multidegree diff(d.size());
    bool ok = e->size() == d.size();
    for (std::size_t i = 0; ok && i < d.size(); ++i) {
      diff[i] = d[i] - (*e)[i];
      if (diff[i] < 0) ok = false;
    }
    if (!ok) continue;
    for (auto& m : monomials_of_degree(*a.ring, diff))
      span.push_back(g.mul_term(m, K(1)));
  }
  return degree_span(a.ring, d, span);
}

template <class K>
Subspace<K> ideal_piece(const Ideal<K>& a, long d) {
  if (a.ring->grading_rank() != 1)
    throw internal_error("scalar degree used with a multigraded ring");
  return ideal_piece(a, Multidegree{d});
}

// Finite-length test without series machinery: S/I is finite-dimensional
// exactly when every variable shows a pure power among the lead monomials.
template <class K>
bool finite_quotient(const Ideal<K>& a) {
  if (a.is_unit()) return true;
  const auto leads = a.gb().lead_monomials();
  const GradedRing& R = *a.ring;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    if (R.has_param() && (long)v == (long)R.param) continue;
    bool covered = false;
    for (auto& m : leads) {
      if (m.e[v] == 0) continue;
      bool pure = true;
      for (std::size_t j = 0; j < m.e.size(); ++j)
        if (j != v && m.e[j] != 0) { pure = false; break; }
      if (pure) { covered = true; break; }
    }
    if (!covered) return false;
  }
  return true;
}

// Homogeneous f of the given multidegree with (I : f) = I. Deterministic
// search: coefficient vectors over the monomial basis drawn from
// 0, 1, -1, 2, -2, ... in rings of growing radius, then seeded pseudorandom
// draws, 10000 candidates in all. Finite quotients fail immediately: a
// nonunit f would be nilpotent and the colon strictly larger.
template <class K>
Polynomial<K> transverse_element(const Ideal<K>& a, const Multidegree& d,
                                 long budget = 10000) {
  if (a.is_unit() || finite_quotient(a)) throw input_error("NoTransverseElement");
  auto mons = monomials_of_degree(*a.ring, d);
  if (mons.empty()) throw input_error("NoTransverseElement");
  const std::size_t n = mons.size();
  auto value = [](long k) -> long { return k % 2 ? (k + 1) / 2 : -k / 2; };
  std::optional<Polynomial<K>> hit;
  auto attempt = [&](const std::vector<long>& coef) {
    Polynomial<K> f(a.ring);
    for (std::size_t i = 0; i < n; ++i)
      if (coef[i] != 0)
        f = f + Polynomial<K>::monomial(a.ring, mons[i], scalar_from_long<K>(*a.ring, coef[i]));
    if (f.is_zero()) return;
    --budget;
    if (is_nonzerodivisor(f, a)) hit = std::move(f);
  };
  for (long r = 1; r <= 16 && budget > 0 && !hit; ++r) {
    std::vector<long> idx(n, 0);
    while (budget > 0 && !hit) {
      if (*std::max_element(idx.begin(), idx.end()) == r) {
        std::vector<long> coef(n);
        for (std::size_t i = 0; i < n; ++i) coef[i] = value(idx[i]);
        attempt(coef);
      }
      std::size_t pos = 0;
      while (pos < n && idx[pos] == r) { idx[pos] = 0; ++pos; }
      if (pos == n) break;
      ++idx[pos];
    }
  }
  std::mt19937 rng(271828u);
  while (!hit && budget > 0) {
    std::vector<long> coef(n);
    for (auto& c : coef) c = (long)(rng() % 19) - 9;
    attempt(coef);
  }
  if (!hit) throw input_error("NoTransverseElement");
  return *hit;
}

template <class K>
Polynomial<K> transverse_element(const Ideal<K>& a, long d, long budget = 10000) {
  return transverse_element(a, Multidegree{d}, budget);
}

// Search over small multidegrees: each distinct variable degree, then their
// pairwise sums. Reports the degree it used.
template <class K>
std::pair<Polynomial<K>, Multidegree> transverse_element(const Ideal<K>& a) {
  const GradedRing& R = *a.ring;
  std::vector<Multidegree> cand;
  auto push = [&](const Multidegree& d) {
    if (std::find(cand.begin(), cand.end(), d) == cand.end()) cand.push_back(d);
  };
  std::vector<Multidegree> vdegs;
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    if (R.has_param() && (long)v == (long)R.param) continue;
    vdegs.push_back(R.degree(R.var_monomial(v)));
  }
  for (auto& d : vdegs) push(d);
  std::size_t linear = cand.size();
  for (auto& d : vdegs)
    for (auto& e : vdegs) {
      Multidegree s(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) s[i] = d[i] + e[i];
      push(s);
    }
  std::sort(cand.begin() + (long)linear, cand.end(),
            [](const Multidegree& x, const Multidegree& y) { return x < y; });
  for (auto& d : cand) {
    try {
      return {transverse_element(a, d), d};
    } catch (const error& e) {
      if (e.code != "InputError") throw;
      if (a.is_unit() || finite_quotient(a)) throw;
    }
  }
  throw input_error("NoTransverseElement");
}

// Minimal homogeneous generators, chosen degree by degree; within a degree
// the new generators are echelon representatives, so the output is canonical
// up to the generators already present.
template <class K>
std::vector<Polynomial<K>> minimal_generators(const Ideal<K>& a) {
  std::vector<Multidegree> degs;
  for (auto& g : a.gens) {
    if (g.is_zero()) continue;
    auto e = g.multidegree();
    if (!e) throw input_error("minimal generators of an inhomogeneous ideal");
    if (std::find(degs.begin(), degs.end(), *e) == degs.end()) degs.push_back(*e);
  }
  std::sort(degs.begin(), degs.end(), [](const Multidegree& x, const Multidegree& y) {
    long sx = 0, sy = 0;
    for (auto v : x) sx += v;
    for (auto v : y) sy += v;
    if (sx != sy) return sx < sy;
    return x < y;
  });
  std::vector<Polynomial<K>> chosen;
  for (auto& d : degs) {
    Subspace<K> full = ideal_piece(a, d);
    Subspace<K> have = ideal_piece(Ideal<K>{a.ring, chosen.empty()
                                                       ? std::vector<Polynomial<K>>{Polynomial<K>::zero(a.ring)}
                                                       : chosen},
                                   d);
    for (std::size_t i = 0; i < full.dim(); ++i) {
      Polynomial<K> v = full.row_poly(i);
      if (!have.contains(v)) {
        chosen.push_back(v);
        have = ideal_piece(Ideal<K>{a.ring, chosen}, d);
      }
    }
  }
  return chosen;
}

} // namespace limsat
