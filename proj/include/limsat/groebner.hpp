#pragma once
// Buchberger's algorithm with representation tracking, multivariate division
// with quotients, reduced bases, and module syzygies of a generating set.

#include <optional>
#include <set>
#include <tuple>

#include "parse.hpp"

namespace limsat {

template <class K>
struct Division {
  Polynomial<K> remainder;
  std::vector<Polynomial<K>> quotients; // f = sum quotients[i] * divisors[i] + remainder
};

// Standard division: the first divisor whose lead divides the current lead
// wins, so results are deterministic for a fixed divisor order.
template <class K>
Division<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors) {
  Division<K> out;
  out.remainder = Polynomial<K>::zero(f.ring);
  out.quotients.assign(divisors.size(), Polynomial<K>::zero(f.ring));
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    const Term<K>& lt = p.leading();
    bool hit = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (divisors[k].is_zero()) continue;
      const Term<K>& dl = divisors[k].leading();
      if (!dl.m.divides(lt.m)) continue;
      Monomial mono = lt.m / dl.m;
      K c = lt.c / dl.c;
      out.quotients[k].terms.push_back({mono, c});
      out.quotients[k].normalize();
      p = p - divisors[k].mul_term(mono, c);
      hit = true;
      break;
    }
    if (!hit) {
      out.remainder.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  out.remainder.normalize();
  return out;
}

template <class K>
struct GrobnerBasis {
  RingPtr ring;
  std::vector<Polynomial<K>> gens;  // the input generators
  std::vector<Polynomial<K>> basis; // reduced basis, leads ascending
  // basis[i] = sum_j reps[i][j] * gens[j]; filled only when requested
  std::vector<std::vector<Polynomial<K>>> reps;

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    for (auto& g : basis) out.push_back(g.lead_monomial());
    return out;
  }
};

template <class K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g) {
  Monomial L = lcm(f.lead_monomial(), g.lead_monomial());
  return f.mul_term(L / f.lead_monomial(), inverse(f.lead_coeff())) -
         g.mul_term(L / g.lead_monomial(), inverse(g.lead_coeff()));
}

namespace detail {

template <class K>
struct WorkingBasis {
  RingPtr ring;
  bool track;
  std::vector<Polynomial<K>> g;
  std::vector<std::vector<Polynomial<K>>> rep;

  void push(Polynomial<K> p, std::vector<Polynomial<K>> r) {
    g.push_back(std::move(p));
    if (track) rep.push_back(std::move(r));
  }
};

// Pairs ordered by total degree of the lead lcm, then by index.
using PairKey = std::tuple<int, std::size_t, std::size_t>;

template <class K>
PairKey pair_key(const WorkingBasis<K>& W, std::size_t i, std::size_t j) {
  Monomial L = lcm(W.g[i].lead_monomial(), W.g[j].lead_monomial());
  return {L.total_degree(), i, j};
}

} // namespace detail

// Buchberger with the coprime-lead and chain criteria. Deterministic: the
// pair queue is ordered, reduction always picks the first matching divisor,
// and the final reduced basis is the canonical one for the ideal and order.
template <class K>
GrobnerBasis<K> groebner(const RingPtr& ring, const std::vector<Polynomial<K>>& gens,
                         bool with_reps = false) {
  for (auto& f : gens)
    if (!(f.ring == ring) && !same_ring(*f.ring, *ring))
      throw internal_error("generator from a different ring");
  detail::WorkingBasis<K> W{ring, with_reps, {}, {}};
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    std::vector<Polynomial<K>> e;
    if (with_reps) {
      e.assign(gens.size(), Polynomial<K>::zero(ring));
      e[j] = Polynomial<K>::constant(ring, K(1));
    }
    W.push(gens[j], std::move(e));
  }

  std::set<detail::PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      queue.insert(detail::pair_key(W, i, n));
      pending.insert({i, n});
    }
  };
  for (std::size_t n = 0; n < W.g.size(); ++n) add_pairs_for(n);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    (void)deg;
    const Monomial &mi = W.g[i].lead_monomial(), &mj = W.g[j].lead_monomial();
    if (coprime(mi, mj)) continue;
    Monomial L = lcm(mi, mj);
    bool chained = false;
    for (std::size_t k = 0; k < W.g.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!W.g[k].lead_monomial().divides(L)) continue;
      auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        chained = true;
    }
    if (chained) continue;
    Polynomial<K> s = spoly(W.g[i], W.g[j]);
    Division<K> d = divide(s, W.g);
    if (d.remainder.is_zero()) continue;
    std::vector<Polynomial<K>> r;
    if (with_reps) {
      r.assign(gens.size(), Polynomial<K>::zero(ring));
      auto acc = [&](const Polynomial<K>& mult, std::size_t idx) {
        for (std::size_t t = 0; t < gens.size(); ++t) r[t] = r[t] + mult * W.rep[idx][t];
      };
      Polynomial<K> ui = Polynomial<K>::monomial(ring, L / mi, inverse(W.g[i].lead_coeff()));
      Polynomial<K> uj = Polynomial<K>::monomial(ring, L / mj, inverse(W.g[j].lead_coeff()));
      acc(ui, i);
      acc(-uj, j);
      for (std::size_t k = 0; k < W.g.size(); ++k)
        if (!d.quotients[k].is_zero()) acc(-d.quotients[k], k);
    }
    W.push(d.remainder, std::move(r));
    add_pairs_for(W.g.size() - 1);
  }

  // Minimalize: keep elements whose lead no other kept lead divides.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < W.g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < W.g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &a = W.g[j].lead_monomial(), &b = W.g[i].lead_monomial();
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }

  GrobnerBasis<K> out;
  out.ring = ring;
  out.gens = gens;
  std::vector<Polynomial<K>> kept;
  std::vector<std::vector<Polynomial<K>>> krep;
  for (auto i : keep) {
    kept.push_back(W.g[i]);
    if (with_reps) krep.push_back(W.rep[i]);
  }
  // Tail-reduce each element against the others until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial<K>> others;
      std::vector<std::size_t> omap;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) { others.push_back(kept[j]); omap.push_back(j); }
      Division<K> d = divide(kept[i], others);
      if (!(d.remainder == kept[i])) {
        changed = true;
        kept[i] = d.remainder;
        if (with_reps)
          for (std::size_t q = 0; q < others.size(); ++q)
            if (!d.quotients[q].is_zero())
              for (std::size_t t = 0; t < gens.size(); ++t)
                krep[i][t] = krep[i][t] - d.quotients[q] * krep[omap[q]][t];
      }
    }
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    K c = inverse(kept[i].lead_coeff());
    kept[i] = c * kept[i];
    if (with_reps)
      for (auto& r : krep[i]) r = c * r;
  }
  std::vector<std::size_t> order(kept.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cmp(kept[a].lead_monomial(), kept[b].lead_monomial(), ring->order) < 0;
  });
  for (auto i : order) {
    out.basis.push_back(kept[i]);
    if (with_reps) out.reps.push_back(krep[i]);
  }
  return out;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GrobnerBasis<K>& gb) {
  return divide(f, gb.basis).remainder;
}

template <class K>
bool reduces_to_zero(const Polynomial<K>& f, const GrobnerBasis<K>& gb) {
  return normal_form(f, gb).is_zero();
}

// Quotients of f against the basis when f lies in the ideal.
template <class K>
std::optional<std::vector<Polynomial<K>>> membership_quotients(
    const Polynomial<K>& f, const GrobnerBasis<K>& gb) {
  Division<K> d = divide(f, gb.basis);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotients;
}

// Generators of {u : sum_j u[j] * gens[j] = 0}. Built from the syzygies of
// the basis (S-pair reductions over all index pairs) translated through the
// base change, together with the rows of (Id - B*A) where A expresses the
// basis in the generators and B the generators in the basis.
template <class K>
std::vector<std::vector<Polynomial<K>>> syzygies(const RingPtr& ring,
                                                 const std::vector<Polynomial<K>>& gens) {
  GrobnerBasis<K> gb = groebner(ring, gens, true);
  std::size_t m = gens.size(), p = gb.basis.size();
  std::vector<std::vector<Polynomial<K>>> out;

  // B: gens in terms of the basis.
  std::vector<std::vector<Polynomial<K>>> B(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto q = membership_quotients(gens[i], gb);
    if (!q) throw internal_error("generator fails to reduce against its own basis");
    B[i] = *q;
  }

  // Syzygies of the basis from every S-pair, pushed through A = gb.reps.
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      Monomial L = lcm(gb.basis[i].lead_monomial(), gb.basis[j].lead_monomial());
      Polynomial<K> s = spoly(gb.basis[i], gb.basis[j]);
      Division<K> d = divide(s, gb.basis);
      if (!d.remainder.is_zero())
        throw internal_error("S-pair of a reduced basis did not vanish");
      std::vector<Polynomial<K>> sg(p, Polynomial<K>::zero(ring));
      sg[i] = sg[i] + Polynomial<K>::monomial(ring, L / gb.basis[i].lead_monomial(),
                                              inverse(gb.basis[i].lead_coeff()));
      sg[j] = sg[j] - Polynomial<K>::monomial(ring, L / gb.basis[j].lead_monomial(),
                                              inverse(gb.basis[j].lead_coeff()));
      for (std::size_t k = 0; k < p; ++k) sg[k] = sg[k] - d.quotients[k];
      std::vector<Polynomial<K>> u(m, Polynomial<K>::zero(ring));
      for (std::size_t k = 0; k < p; ++k)
        if (!sg[k].is_zero())
          for (std::size_t t = 0; t < m; ++t) u[t] = u[t] + sg[k] * gb.reps[k][t];
      bool nz = false;
      for (auto& x : u)
        if (!x.is_zero()) { nz = true; break; }
      if (nz) out.push_back(std::move(u));
    }

  // Rows of Id - B*A.
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Polynomial<K>> u(m, Polynomial<K>::zero(ring));
    u[i] = Polynomial<K>::constant(ring, K(1));
    for (std::size_t k = 0; k < p; ++k)
      if (!B[i][k].is_zero())
        for (std::size_t t = 0; t < m; ++t) u[t] = u[t] - B[i][k] * gb.reps[k][t];
    bool nz = false;
    for (auto& x : u)
      if (!x.is_zero()) { nz = true; break; }
    if (nz) out.push_back(std::move(u));
  }
  return out;
}

} // namespace limsat
