#pragma once
// Inverse systems: the contraction action (characteristic-free) and the
// differentiation action (characteristic zero), perps under the apolarity
// pairing, apolar annihilators via catalecticant kernels, and ideals
// reconstructed from dual spanning sets.

#include <map>

#include "hilbert.hpp"

namespace limsat {

enum class DualAction { contraction, differentiation };

namespace detail {

// Falling factorial prod b*(b-1)*...*(b-a+1) in the coefficient field.
template <class K>
K falling(long b, long a) {
  K r(1);
  for (long i = 0; i < a; ++i) r = r * K(b - i);
  return r;
}

} // namespace detail

template <class K>
void require_action_valid(const RingPtr& R, DualAction action) {
  if (action == DualAction::differentiation && R->characteristic != 0)
    throw input_error("differentiation action needs characteristic zero");
}

// sigma acting on F; sigma lives in the primal ring, F in the dual ring.
template <class K>
Polynomial<K> contract(const Polynomial<K>& sigma, const Polynomial<K>& F,
                       DualAction action = DualAction::contraction) {
  if (sigma.ring->nvars() != F.ring->nvars())
    throw input_error("action across different variable counts");
  require_action_valid<K>(sigma.ring, action);
  Polynomial<K> out(F.ring);
  for (auto& s : sigma.terms)
    for (auto& f : F.terms) {
      Monomial r;
      r.e.resize(f.m.e.size());
      bool ok = true;
      for (std::size_t i = 0; i < f.m.e.size(); ++i) {
        int a = i < s.m.e.size() ? s.m.e[i] : 0;
        r.e[i] = f.m.e[i] - a;
        if (r.e[i] < 0) { ok = false; break; }
      }
      if (!ok) continue;
      K c = s.c * f.c;
      if (action == DualAction::differentiation)
        for (std::size_t i = 0; i < f.m.e.size(); ++i) {
          int a = i < s.m.e.size() ? s.m.e[i] : 0;
          if (a > 0) c = c * detail::falling<K>(f.m.e[i], a);
        }
      out.terms.push_back({std::move(r), c});
    }
  out.normalize();
  return out;
}

template <class K>
bool annihilates(const Polynomial<K>& sigma, const Polynomial<K>& F,
                 DualAction action = DualAction::contraction) {
  return contract(sigma, F, action).is_zero();
}

// Matrix of S_e -> S*_{d-e}, sigma |-> sigma . F, over monomial bases.
template <class K>
struct CatalecticantData {
  std::vector<Monomial> domain;   // monomials of S_e
  std::vector<Monomial> codomain; // monomials of S*_{d-e}
  Mat<K> m;                       // rows follow the domain
};

template <class K>
CatalecticantData<K> catalecticant(const RingPtr& R, const Polynomial<K>& F, long e,
                                   DualAction action = DualAction::contraction) {
  long d = F.total_degree();
  if (d < 0) throw input_error("catalecticant of the zero form");
  CatalecticantData<K> out;
  out.domain = monomials_of_degree(*R, e);
  out.codomain = d - e >= 0 ? monomials_of_degree(*F.ring, d - e) : std::vector<Monomial>{};
  out.m = Mat<K>(out.domain.size(), out.codomain.size());
  for (std::size_t r = 0; r < out.domain.size(); ++r) {
    Polynomial<K> img = contract(Polynomial<K>::monomial(R, out.domain[r], K(1)), F, action);
    for (auto& t : img.terms) {
      auto it = std::find(out.codomain.begin(), out.codomain.end(), t.m);
      if (it == out.codomain.end()) throw internal_error("image outside the codomain basis");
      out.m.at(r, (std::size_t)(it - out.codomain.begin())) = t.c;
    }
  }
  return out;
}

template <class K>
long catalecticant_rank(const RingPtr& R, const Polynomial<K>& F, long e,
                        DualAction action = DualAction::contraction) {
  return (long)rank(catalecticant(R, F, e, action).m);
}

// Degree-e slice of Ann(F) as a subspace of S_e.
template <class K>
Subspace<K> annihilator_piece(const RingPtr& R, const Polynomial<K>& F, long e,
                              DualAction action = DualAction::contraction) {
  CatalecticantData<K> cat = catalecticant(R, F, e, action);
  auto ker = kernel_basis(transpose_rows(cat.m));
  std::vector<Polynomial<K>> gens;
  for (auto& v : ker) {
    Polynomial<K> p(R);
    for (std::size_t j = 0; j < cat.domain.size(); ++j)
      if (!is_zero(v[j])) p.terms.push_back({cat.domain[j], v[j]});
    p.normalize();
    gens.push_back(std::move(p));
  }
  return degree_span(R, Multidegree{e}, gens);
}

// Generators of Ann(F) found in degrees <= up_to; up_to >= deg F + 1 yields
// the whole annihilator.
template <class K>
Ideal<K> annihilator(const RingPtr& R, const Polynomial<K>& F, long up_to,
                     DualAction action = DualAction::contraction) {
  std::vector<Polynomial<K>> chosen;
  for (long e = 1; e <= up_to; ++e) {
    Subspace<K> full = annihilator_piece(R, F, e, action);
    if (full.dim() == 0) continue;
    Ideal<K> have{R, chosen.empty() ? std::vector<Polynomial<K>>{Polynomial<K>::zero(R)}
                                    : chosen};
    Subspace<K> have_e = ideal_piece(have, e);
    for (std::size_t i = 0; i < full.dim(); ++i) {
      Polynomial<K> v = full.row_poly(i);
      if (!have_e.contains(v)) {
        chosen.push_back(v);
        have_e = ideal_piece(Ideal<K>{R, chosen}, e);
      }
    }
  }
  if (chosen.empty()) chosen.push_back(Polynomial<K>::zero(R));
  return {R, std::move(chosen)};
}

template <class K>
Multidegree degree_of_basis(const Subspace<K>& V) {
  if (V.basis.empty()) throw internal_error("empty degree slice");
  return V.ring->degree(V.basis.front());
}

// Perp of a degree slice under the apolarity pairing, landing in the ring
// `target` on the other side of the pairing. The monomial pairing matrix is
// the identity for contraction and the diagonal of factorials for
// differentiation.
template <class K>
Subspace<K> perp(const Subspace<K>& V, const RingPtr& target,
                 DualAction action = DualAction::contraction) {
  require_action_valid<K>(target, action);
  std::vector<Monomial> tbasis;
  tbasis.reserve(V.basis.size());
  // Pairing matches equal exponent vectors; reuse the source basis order.
  for (auto& m : V.basis) tbasis.push_back(m);
  Mat<K> m = V.rr;
  if (action == DualAction::differentiation)
    for (std::size_t j = 0; j < V.basis.size(); ++j) {
      K w(1);
      for (auto e : V.basis[j].e) w = w * detail::falling<K>(e, e);
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = m.at(i, j) * w;
    }
  auto ker = kernel_basis(m);
  std::vector<Polynomial<K>> gens;
  for (auto& v : ker) {
    Polynomial<K> p(target);
    for (std::size_t j = 0; j < tbasis.size(); ++j)
      if (!is_zero(v[j])) p.terms.push_back({tbasis[j], v[j]});
    p.normalize();
    gens.push_back(std::move(p));
  }
  return span_subspace(target, monomials_of_degree(*target, degree_of_basis(V)), gens);
}

// The e-th power of the point functional: under contraction the clean power
// is sum over |b| = e of p^b x^b (no multinomial coefficients); under
// differentiation it is the ordinary power of the linear form.
template <class K>
Polynomial<K> power_of_point(const RingPtr& dual, const std::vector<K>& p, long e,
                             DualAction action = DualAction::contraction) {
  if (p.size() != dual->nvars()) throw input_error("point coordinate count mismatch");
  require_action_valid<K>(dual, action);
  if (action == DualAction::differentiation) {
    Polynomial<K> L(dual);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!is_zero(p[i])) L.terms.push_back({dual->var_monomial(i), p[i]});
    L.normalize();
    Polynomial<K> r = Polynomial<K>::constant(dual, K(1));
    for (long i = 0; i < e; ++i) r = r * L;
    return r;
  }
  Polynomial<K> r(dual);
  for (auto& m : monomials_of_degree(*dual, Multidegree{e})) {
    K c(1);
    for (std::size_t i = 0; i < m.e.size(); ++i)
      for (int k = 0; k < m.e[i]; ++k) c = c * p[i];
    if (!is_zero(c)) r.terms.push_back({m, c});
  }
  r.normalize();
  return r;
}

// Ideal whose degree-e piece is the perp of pieces[e] for every e <= top.
// Requires the pieces to be closed under contraction by the variables.
template <class K>
Ideal<K> ideal_from_dual(const RingPtr& R, const std::map<long, std::vector<Polynomial<K>>>& pieces,
                         long top, DualAction action = DualAction::contraction) {
  require_action_valid<K>(R, action);
  RingPtr dual = pieces.empty() || pieces.begin()->second.empty()
                     ? dual_ring(R)
                     : pieces.begin()->second.front().ring;
  auto piece_span = [&](long e) -> Subspace<K> {
    auto it = pieces.find(e);
    std::vector<Polynomial<K>> gens;
    if (it != pieces.end()) gens = it->second;
    return span_subspace(dual, monomials_of_degree(*dual, Multidegree{e}), gens);
  };
  for (long e = 1; e <= top; ++e) {
    auto it = pieces.find(e);
    if (it == pieces.end()) continue;
    Subspace<K> below = piece_span(e - 1);
    for (auto& f : it->second)
      for (std::size_t v = 0; v < R->nvars(); ++v) {
        Polynomial<K> img =
            contract(Polynomial<K>::variable(R, v), f, action);
        if (!img.is_zero() && !below.contains(img))
          throw input_error("NotClosedUnderContraction");
      }
  }
  std::vector<Polynomial<K>> chosen;
  for (long e = 0; e <= top; ++e) {
    Subspace<K> target = perp(piece_span(e), R, action);
    Ideal<K> have{R, chosen.empty() ? std::vector<Polynomial<K>>{Polynomial<K>::zero(R)}
                                    : chosen};
    Subspace<K> have_e = ideal_piece(have, e);
    for (std::size_t i = 0; i < target.dim(); ++i) {
      Polynomial<K> v = target.row_poly(i);
      if (!have_e.contains(v)) {
        chosen.push_back(v);
        have_e = ideal_piece(Ideal<K>{R, chosen}, e);
      }
    }
    if (have_e.dim() != target.dim())
      throw internal_error("degree piece mismatch after completion");
  }
  if (chosen.empty()) chosen.push_back(Polynomial<K>::zero(R));
  return {R, std::move(chosen)};
}

} // namespace limsat
