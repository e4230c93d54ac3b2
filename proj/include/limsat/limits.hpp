#pragma once
// Degreewise t -> 0 limits of one-parameter families of forms and ideals,
// plus verification of proposed limit forms with explicit genericity
// certificates over k[t].

#include "hilbert.hpp"
#include "unipoly.hpp"

namespace limsat {

namespace detail {

// Family elements live either in the target ring itself or in its extension
// by one degree-0 parameter variable.
inline void check_family_ring(const GradedRing& plain, const GradedRing& FR) {
  if (plain.has_param()) throw internal_error("limit target must be a plain ring");
  if (!FR.has_param()) {
    if (!same_ring(plain, FR)) throw input_error("family element over a different ring");
    return;
  }
  auto vars = FR.vars;
  vars.erase(vars.begin() + FR.param);
  auto grading = FR.grading;
  for (auto& row : grading) row.erase(row.begin() + FR.param);
  if (vars != plain.vars || grading != plain.grading ||
      FR.characteristic != plain.characteristic)
    throw input_error("family element over a different ring");
}

// Coefficient row of f over the degree-d monomial basis of the plain ring;
// each entry collects the t-powers attached to one stripped monomial.
template <class K>
TRow<K> family_row(const GradedRing& plain, const std::vector<Monomial>& cols,
                   const Multidegree& d, const Polynomial<K>& f) {
  const GradedRing& FR = *f.ring;
  check_family_ring(plain, FR);
  TRow<K> row(cols.size());
  for (auto& t : f.terms) {
    Monomial sm = t.m;
    std::size_t tpow = 0;
    if (FR.has_param()) {
      tpow = (std::size_t)sm.e[FR.param];
      sm.e.erase(sm.e.begin() + FR.param);
    }
    if (plain.degree(sm) != d)
      throw input_error("family element is not homogeneous of the requested degree");
    std::size_t j = 0;
    while (j < cols.size() && !(cols[j] == sm)) ++j;
    if (j == cols.size()) throw internal_error("monomial missing from degree basis");
    row[j] = row[j] + UniPoly<K>::t_power(tpow, t.c);
  }
  return row;
}

template <class K>
Subspace<K> row_space_at0(const RingPtr& plain, const std::vector<Monomial>& cols,
                          const TMat<K>& m) {
  std::vector<Polynomial<K>> polys;
  for (auto& r : m) {
    Polynomial<K> p(plain);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!is_zero(r[j].at0())) p.terms.push_back({cols[j], r[j].at0()});
    p.normalize();
    polys.push_back(std::move(p));
  }
  return span_subspace(plain, cols, polys);
}

} // namespace detail

// The t -> 0 limit of the spans of a family inside one graded piece. The
// certificate is the product of the monic echelon pivots of the family's
// coefficient rows: wherever it does not vanish, the specialized family
// spans a subspace of the generic rank.
template <class K>
struct LimitSlice {
  Subspace<K> limit;
  std::size_t generic_rank = 0;
  UniPoly<K> certificate;
};

template <class K>
LimitSlice<K> limit_subspace(const RingPtr& plain, const std::vector<Polynomial<K>>& fam,
                             const Multidegree& d) {
  auto cols = monomials_of_degree(*plain, d);
  TMat<K> m;
  for (auto& f : fam) {
    auto row = detail::family_row(*plain, cols, d, f);
    if (!row_zero(row)) m.push_back(std::move(row));
  }
  LimitSlice<K> out;
  auto piv = tmat_echelon(m);
  out.generic_rank = piv.size();
  out.certificate = UniPoly<K>(K(1));
  for (std::size_t i = 0; i < piv.size(); ++i)
    out.certificate = out.certificate * m[i][piv[i]];
  // a saturated row module stays independent at t = 0, so the fiber there
  // has the generic rank
  tmat_saturate(m);
  out.limit = detail::row_space_at0(plain, cols, m);
  if (out.limit.dim() != out.generic_rank)
    throw internal_error("limit fiber dropped rank after saturation");
  return out;
}

template <class K>
LimitSlice<K> limit_subspace(const RingPtr& plain, const std::vector<Polynomial<K>>& fam,
                             long d) {
  return limit_subspace(plain, fam, Multidegree{d});
}

// Outcome of checking proposed limit forms G against a family F. On success
// the specialized F are independent wherever the certificate is nonzero, and
// the limit of their spans is spanned by the G at t = 0.
template <class K>
struct LimitFormsReport {
  bool ok = false;
  std::string failure;     // "MembershipFails" or "DependentLimits"
  long failing_index = -1; // which membership failed
  Subspace<K> limit;
  UniPoly<K> certificate;
};

// Checks that t^{d_i} G_i lies in the k[t]-module generated by the rows of F
// and that the G_i stay independent at t = 0. Membership against an echelon
// basis is decided by successive exact division at the pivot columns: the
// expansion coefficients are forced, so a nonzero residue is a certificate of
// non-membership.
template <class K>
LimitFormsReport<K> verify_limit_forms(const RingPtr& plain,
                                       const std::vector<Polynomial<K>>& F,
                                       const std::vector<Polynomial<K>>& G,
                                       const std::vector<long>& dpow) {
  if (F.empty()) throw input_error("verify_limit_forms needs a nonempty family");
  if (F.size() != G.size() || F.size() != dpow.size())
    throw input_error("family, limit forms and exponents must have equal length");
  for (long d : dpow)
    if (d < 0) throw input_error("t-exponents must be nonnegative");
  auto deg = F[0].multidegree();
  if (!deg) throw input_error("family element is not homogeneous");
  auto cols = monomials_of_degree(*plain, *deg);

  TMat<K> m;
  for (auto& f : F) m.push_back(detail::family_row(*plain, cols, *deg, f));
  auto piv = tmat_echelon(m);

  LimitFormsReport<K> rep;
  rep.certificate = UniPoly<K>(K(1));
  for (std::size_t i = 0; i < piv.size(); ++i)
    rep.certificate = rep.certificate * m[i][piv[i]];

  TMat<K> grows;
  for (std::size_t i = 0; i < G.size(); ++i) {
    auto row = detail::family_row(*plain, cols, *deg, G[i]);
    grows.push_back(row);
    TRow<K> v(cols.size());
    auto shift = UniPoly<K>::t_power((std::size_t)dpow[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) v[j] = shift * row[j];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (v[piv[r]].zero()) continue;
      auto [q, rem] = divmod(v[piv[r]], m[r][piv[r]]);
      if (!rem.zero()) break;
      for (std::size_t j = 0; j < cols.size(); ++j) v[j] = v[j] - q * m[r][j];
    }
    if (!row_zero(v)) {
      rep.failure = "MembershipFails";
      rep.failing_index = (long)i;
      return rep;
    }
  }

  Mat<K> ev = tmat_at0(grows);
  if (rank(ev) != G.size()) {
    rep.failure = "DependentLimits";
    return rep;
  }
  // membership plus independence at 0 forces the family's generic rank up to
  // |F|, and the saturation's fiber at 0 then matches the span of the G there
  rep.ok = true;
  rep.limit = detail::row_space_at0(plain, cols, grows);
  return rep;
}

// A degreewise limit ideal up to a degree bound. The Hilbert entries record
// codim of the limit piece in each degree; generators_within_bound reports
// that no new minimal generator appeared in the top degree, a heuristic sign
// that the listed generators are complete.
template <class K>
struct LimitIdealResult {
  Ideal<K> ideal;
  std::vector<long> hilbert;
  bool generators_within_bound = false;
};

namespace detail {

template <class K, class PieceFn>
LimitIdealResult<K> assemble_limit_ideal(const RingPtr& plain, long bound, PieceFn piece) {
  if (plain->grading_rank() != 1)
    throw input_error("limit ideals need a single grading row");
  if (bound < 0) throw input_error("degree bound must be nonnegative");
  std::vector<Polynomial<K>> chosen;
  std::vector<long> hilbert;
  long last_new = -1;
  for (long e = 0; e <= bound; ++e) {
    Subspace<K> L = piece(e);
    hilbert.push_back((long)L.basis.size() - (long)L.dim());
    std::vector<Polynomial<K>> mult;
    for (auto& c : chosen) {
      long dc = c.total_degree();
      if (dc > e) continue;
      for (auto& mon : monomials_of_degree(*plain, e - dc))
        mult.push_back(c.mul_term(mon, scalar_from_long<K>(*plain, 1)));
    }
    Subspace<K> prev = span_subspace(plain, L.basis, mult);
    for (auto& p : L.basis_polys())
      if (!prev.contains(p)) {
        chosen.push_back(p);
        mult.push_back(p);
        prev = span_subspace(plain, L.basis, mult);
        last_new = e;
      }
    if (prev.dim() != L.dim()) throw internal_error("limit piece not spanned by generators");
  }
  LimitIdealResult<K> out;
  out.ideal = Ideal<K>(plain, std::move(chosen));
  out.hilbert = std::move(hilbert);
  out.generators_within_bound = last_new < bound;
  return out;
}

} // namespace detail

// Limit of the ideals generated by a family of forms: in each degree up to
// the bound, the limit of the span of all monomial multiples of the family.
template <class K>
LimitIdealResult<K> limit_ideal(const RingPtr& plain, const std::vector<Polynomial<K>>& gens,
                                long bound) {
  std::vector<long> degs;
  for (auto& g : gens) {
    auto d = g.multidegree();
    if (!d) throw input_error("family element is not homogeneous");
    degs.push_back((*d)[0]);
  }
  return detail::assemble_limit_ideal<K>(plain, bound, [&](long e) {
    std::vector<Polynomial<K>> fam;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (degs[i] > e) continue;
      for (auto& mon : monomials_of_degree(*gens[i].ring, e - degs[i]))
        fam.push_back(gens[i].mul_term(mon, scalar_from_long<K>(*gens[i].ring, 1)));
    }
    return limit_subspace(plain, fam, e).limit;
  });
}

// Limit of the ideals of a moving point set. A degree-e form vanishes at a
// point exactly when its coefficient row pairs to zero with the e-th power of
// the point, so the degree-e piece over k(t) is the left kernel of the
// evaluation matrix; kernels over k[t] are already t-saturated.
template <class K>
LimitIdealResult<K> limit_ideal_points(const RingPtr& plain,
                                       const std::vector<TRow<K>>& pts, long bound) {
  if (plain->has_param()) throw internal_error("limit target must be a plain ring");
  if (pts.empty()) throw input_error("no points given");
  for (auto& p : pts) {
    if (p.size() != plain->nvars()) throw input_error("point coordinate count mismatch");
    if (row_zero(p)) throw input_error("point with identically zero coordinates");
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool proportional = true;
      for (std::size_t a = 0; a < plain->nvars() && proportional; ++a)
        for (std::size_t b = a + 1; b < plain->nvars() && proportional; ++b)
          if (!(pts[i][a] * pts[j][b] == pts[i][b] * pts[j][a])) proportional = false;
      if (proportional)
        throw input_error("PointsCollideIdentically: points " + std::to_string(i) +
                          " and " + std::to_string(j) + " are equal for every t");
    }
  return detail::assemble_limit_ideal<K>(plain, bound, [&](long e) {
    auto cols = monomials_of_degree(*plain, e);
    TMat<K> evm(cols.size(), TRow<K>(pts.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        UniPoly<K> v{scalar_from_long<K>(*plain, 1)};
        for (std::size_t a = 0; a < plain->nvars(); ++a)
          for (int k = 0; k < cols[i].e[a]; ++k) v = v * pts[j][a];
        evm[i][j] = std::move(v);
      }
    TMat<K> ker = tmat_left_kernel(evm);
    auto sp = detail::row_space_at0(plain, cols, ker);
    if (sp.dim() != ker.size()) throw internal_error("point kernel dropped rank at t = 0");
    return sp;
  });
}

} // namespace limsat
