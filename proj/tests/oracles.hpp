#pragma once
// Independent dense-linear-algebra oracles the test suites check the main
// algorithms against. Everything here works degree by degree from first
// principles: no normal forms, no bases, just spans and kernels.

#include <random>

#include "limsat/hilbert.hpp"

namespace oracles {

using namespace limsat;

inline Polynomial<Rat> random_form(const RingPtr& R, long d, std::mt19937& rng,
                                   int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> coef(lo, hi);
  Polynomial<Rat> p(R);
  for (auto& m : monomials_of_degree(*R, Multidegree{d}))
    p.terms.push_back({m, Rat(coef(rng))});
  p.normalize();
  return p;
}

// Membership of f in the ideal, decided by spanning the degree slice with
// monomial multiples of the generators.
inline bool member_by_span(const Ideal<Rat>& I, const Polynomial<Rat>& f) {
  if (f.is_zero()) return true;
  auto d = f.multidegree();
  if (!d) throw internal_error("oracle needs homogeneous input");
  return ideal_piece(I, *d).contains(f);
}

// Value of H_{S/I}(d) from the span dimension, not from lead monomials.
inline long hilbert_by_span(const Ideal<Rat>& I, long d) {
  auto all = monomials_of_degree(*I.ring, Multidegree{d});
  return (long)all.size() - (long)ideal_piece(I, Multidegree{d}).dim();
}

// Degree slice of the syzygy module of `gens` as explicit tuples, by a dense
// kernel computation; checks they all lie in the span of monomial multiples
// of `returned`. Assumes homogeneous generators.
inline bool syzygies_complete_in_degree(const RingPtr& R,
                                        const std::vector<Polynomial<Rat>>& gens,
                                        const std::vector<std::vector<Polynomial<Rat>>>& returned,
                                        long d) {
  std::vector<long> gdeg;
  for (auto& g : gens) {
    auto e = g.multidegree();
    if (!e) throw internal_error("oracle needs homogeneous generators");
    gdeg.push_back((*e)[0]);
  }
  // domain basis: (generator index, monomial) pairs
  struct Slot { std::size_t gen; Monomial m; };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (d - gdeg[i] < 0) continue;
    for (auto& m : monomials_of_degree(*R, Multidegree{d - gdeg[i]}))
      slots.push_back({i, m});
  }
  auto target = monomials_of_degree(*R, Multidegree{d});
  auto col_of = [&](const Monomial& m) {
    auto it = std::find(target.begin(), target.end(), m);
    if (it == target.end()) throw internal_error("degree bookkeeping failed");
    return (std::size_t)(it - target.begin());
  };
  Mat<Rat> phi(slots.size(), target.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto img = gens[slots[s].gen].mul_term(slots[s].m, Rat(1));
    for (auto& t : img.terms) phi.at(s, col_of(t.m)) += t.c;
  }
  auto all_syz = kernel_basis(transpose_rows(phi)); // tuples over slots

  // span of monomial multiples of the returned syzygies, in slot coordinates
  std::vector<std::vector<Rat>> span_rows;
  for (auto& u : returned) {
    long delta = -1;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) continue;
      auto e = u[i].multidegree();
      if (!e) throw internal_error("inhomogeneous syzygy component");
      long cand = (*e)[0] + gdeg[i];
      if (delta < 0) delta = cand;
      else if (delta != cand) throw internal_error("inhomogeneous syzygy");
    }
    if (delta < 0 || delta > d) continue;
    for (auto& m : monomials_of_degree(*R, Multidegree{d - delta})) {
      std::vector<Rat> row(slots.size(), Rat(0));
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        auto prod = u[i].mul_term(m, Rat(1));
        for (auto& t : prod.terms) {
          bool placed = false;
          for (std::size_t s = 0; s < slots.size(); ++s)
            if (slots[s].gen == i && slots[s].m == t.m) {
              row[s] += t.c;
              placed = true;
              break;
            }
          if (!placed) throw internal_error("slot lookup failed");
        }
      }
      span_rows.push_back(std::move(row));
    }
  }
  Mat<Rat> span(span_rows.size(), slots.size());
  for (std::size_t i = 0; i < span_rows.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j) span.at(i, j) = span_rows[i][j];
  std::size_t base_rank = rank(span);
  Mat<Rat> both(span_rows.size() + all_syz.size(), slots.size());
  for (std::size_t i = 0; i < span_rows.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j) both.at(i, j) = span_rows[i][j];
  for (std::size_t i = 0; i < all_syz.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j)
      both.at(span_rows.size() + i, j) = all_syz[i][j];
  return rank(both) == base_rank;
}

inline bool exact_syzygy(const std::vector<Polynomial<Rat>>& gens,
                         const std::vector<Polynomial<Rat>>& u) {
  if (gens.empty()) return u.empty();
  Polynomial<Rat> s = Polynomial<Rat>::zero(gens[0].ring);
  for (std::size_t i = 0; i < gens.size(); ++i) s = s + u[i] * gens[i];
  return s.is_zero();
}

} // namespace oracles
