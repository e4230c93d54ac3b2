#pragma once
// Hilbert functions of homogeneous quotients: exact degreewise counts, the
// certified eventual value via the monomial-ideal series numerator, growth
// bounds, and Artinian structure predicates.

#include "ideal.hpp"

namespace limsat {

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  for (auto& m : gens) {
    bool redundant = false;
    for (auto& p : out)
      if (p.divides(m)) { redundant = true; break; }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Coefficients of the series numerator N with H_{S/I} = N / (1-T)^n, for a
// monomial ideal in a standard graded ring. Splits on a variable of a mixed
// generator; pure-power generators in distinct variables are the base case.
inline std::vector<long> series_numerator(std::vector<Monomial> gens) {
  gens = minimalize(gens);
  for (auto& m : gens)
    if (m.is_one()) return {}; // unit ideal: zero numerator
  std::size_t pivot_var = SIZE_MAX;
  for (auto& m : gens) {
    int support = 0, first = -1;
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) { ++support; if (first < 0) first = (int)i; }
    if (support >= 2) { pivot_var = (std::size_t)first; break; }
  }
  if (pivot_var == SIZE_MAX) {
    // pairwise coprime pure powers: N = prod (1 - T^deg)
    std::vector<long> N{1};
    for (auto& m : gens) {
      std::size_t d = (std::size_t)m.total_degree();
      std::vector<long> next(N.size() + d, 0);
      for (std::size_t i = 0; i < N.size(); ++i) {
        next[i] += N[i];
        next[i + d] -= N[i];
      }
      N = std::move(next);
    }
    while (!N.empty() && N.back() == 0) N.pop_back();
    return N;
  }
  // N(I) = N(I + (x)) + T * N(I : x)
  std::vector<Monomial> plus, colon;
  Monomial x;
  x.e.assign(gens[0].e.size(), 0);
  x.e[pivot_var] = 1;
  plus.push_back(x);
  for (auto& m : gens) {
    if (m.e[pivot_var] == 0) plus.push_back(m);
    Monomial c = m;
    if (c.e[pivot_var] > 0) --c.e[pivot_var];
    colon.push_back(c);
  }
  std::vector<long> A = series_numerator(std::move(plus));
  std::vector<long> B = series_numerator(std::move(colon));
  std::vector<long> N(std::max(A.size(), B.size() + 1), 0);
  for (std::size_t i = 0; i < A.size(); ++i) N[i] += A[i];
  for (std::size_t i = 0; i < B.size(); ++i) N[i + 1] += B[i];
  while (!N.empty() && N.back() == 0) N.pop_back();
  return N;
}

} // namespace limsat::detail

// Count of degree-d monomials outside the lead-monomial ideal.
template <class K>
long standard_monomial_count(const GrobnerBasis<K>& gb, const Multidegree& d) {
  auto leads = gb.lead_monomials();
  long count = 0;
  for (auto& m : monomials_of_degree(*gb.ring, d)) {
    bool in = false;
    for (auto& l : leads)
      if (l.divides(m)) { in = true; break; }
    if (!in) ++count;
  }
  return count;
}

template <class K>
std::vector<Monomial> standard_monomials(const GrobnerBasis<K>& gb, const Multidegree& d) {
  auto leads = gb.lead_monomials();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*gb.ring, d)) {
    bool in = false;
    for (auto& l : leads)
      if (l.divides(m)) { in = true; break; }
    if (!in) out.push_back(m);
  }
  return out;
}

template <class K>
long hilbert_value(const Ideal<K>& I, const Multidegree& d) {
  return standard_monomial_count(I.gb(), d);
}

template <class K>
long hilbert_value(const Ideal<K>& I, long d) {
  return standard_monomial_count(I.gb(), Multidegree{d});
}

// Summary of H_{S/I} for a standard graded ring, exact in every degree.
// series numerator N = (1-T)^{n-dim} * M with M(1) != 0; dim is the Krull
// dimension of S/I, and for dim <= 1 the function is eventually constant.
struct HilbertSummary {
  std::vector<long> reduced_numerator; // M above
  long krull_dim = 0;
  bool eventually_constant = false;
  long eventual_value = 0;
  long stable_from = 0; // least s with H(d) = eventual_value for all d >= s

  long value(long d) const {
    if (d < 0) return 0;
    const auto& M = reduced_numerator;
    if (krull_dim == 0) return d < (long)M.size() ? M[(std::size_t)d] : 0;
    if (krull_dim == 1) {
      long s = 0;
      for (long i = 0; i <= d && i < (long)M.size(); ++i) s += M[(std::size_t)i];
      return s;
    }
    throw internal_error("degreewise value requested from a summary of dimension > 1");
  }
};

template <class K>
HilbertSummary hilbert_summary(const Ideal<K>& I) {
  if (!I.ring->standard_graded())
    throw internal_error("series summary needs a standard graded ring");
  std::vector<long> N = detail::series_numerator(I.gb().lead_monomials());
  HilbertSummary out;
  std::size_t n = I.ring->nvars();
  // factor out (1-T)^k
  std::size_t k = 0;
  std::vector<long> M = N;
  while (!M.empty()) {
    long sum = 0;
    for (auto c : M) sum += c;
    if (sum != 0) break;
    // divide by (1-T): quotient q with q_i = sum_{j<=i} m_j
    std::vector<long> q(M.size() - 1, 0);
    long acc = 0;
    for (std::size_t i = 0; i + 1 < M.size(); ++i) {
      acc += M[i];
      q[i] = acc;
    }
    M = std::move(q);
    while (!M.empty() && M.back() == 0) M.pop_back();
    ++k;
  }
  out.reduced_numerator = M;
  out.krull_dim = (long)n - (long)k;
  if (out.krull_dim < 0) throw internal_error("series numerator over-divides");
  if (out.krull_dim == 0) {
    out.eventually_constant = true;
    out.eventual_value = 0;
    out.stable_from = (long)M.size();
  } else if (out.krull_dim == 1) {
    out.eventually_constant = true;
    long s = 0;
    for (auto c : M) s += c;
    out.eventual_value = s;
    out.stable_from = M.empty() ? 0 : (long)M.size() - 1;
  }
  return out;
}

// Largest e >= 0 with H(e) != H(e+1); 0 when H is constant.
inline long jump_degree(const HilbertSummary& h) {
  if (!h.eventually_constant)
    throw internal_error("jump degree of a non-stabilizing function");
  for (long e = std::max<long>(h.stable_from, 1) - 1; e >= 0; --e)
    if (h.value(e) != h.value(e + 1)) return e;
  return 0;
}

// Macaulay bound: the largest value H(d+1) may take given H(d) = c, via the
// binomial representation of c in degree d (d >= 1).
inline long macaulay_growth_bound(long c, long d) {
  if (d < 1) throw internal_error("growth bound needs degree >= 1");
  if (c < 0) throw internal_error("negative function value");
  if (c == 0) return 0;
  auto binom = [](long n, long k) -> long {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::vector<std::pair<long, long>> rep; // (a_i, i), i = d, d-1, ...
  long rem = c, i = d;
  while (rem > 0 && i >= 1) {
    long a = i;
    while (binom(a + 1, i) <= rem) ++a;
    rep.push_back({a, i});
    rem -= binom(a, i);
    --i;
  }
  if (rem != 0) throw internal_error("binomial representation failed");
  long bound = 0;
  for (auto [a, j] : rep) bound += binom(a + 1, j + 1);
  return bound;
}

struct Admissibility {
  bool admissible = true;
  long violation_at = -1; // first e with H(e+1) above the growth bound
};

// Growth check for functions of cyclic quotients: H(0) = 1 and every step
// H(e) -> H(e+1) within the Macaulay bound. Degree 0 -> 1 is unconstrained.
inline Admissibility macaulay_admissible(const std::vector<long>& H) {
  if (H.empty() || H[0] != 1) return {false, 0};
  for (std::size_t e = 1; e + 1 < H.size(); ++e) {
    if (H[e] < 0 || H[e + 1] < 0) return {false, (long)e};
    if (H[e + 1] > macaulay_growth_bound(H[e], (long)e)) return {false, (long)e};
  }
  return {};
}

template <class K>
bool is_artinian(const Ideal<K>& I) {
  return hilbert_summary(I).krull_dim == 0;
}

// Total socle dimension of an Artinian quotient: kernel of multiplication
// by all variables, summed over degrees.
template <class K>
long socle_dimension(const Ideal<K>& I) {
  HilbertSummary h = hilbert_summary(I);
  if (h.krull_dim != 0) throw internal_error("socle of a non-Artinian quotient");
  const GrobnerBasis<K>& gb = I.gb();
  std::size_t n = I.ring->nvars();
  long total = 0;
  long top = (long)h.reduced_numerator.size(); // H vanishes from here on
  for (long d = 0; d < top; ++d) {
    auto Bd = standard_monomials(gb, Multidegree{d});
    auto Bd1 = standard_monomials(gb, Multidegree{d + 1});
    if (Bd.empty()) continue;
    Mat<K> M(Bd.size(), n * Bd1.size());
    for (std::size_t r = 0; r < Bd.size(); ++r)
      for (std::size_t v = 0; v < n; ++v) {
        Polynomial<K> f = Polynomial<K>::monomial(I.ring, Bd[r], K(1))
                              .mul_term(I.ring->var_monomial(v), K(1));
        Polynomial<K> nf = normal_form(f, gb);
        for (auto& t : nf.terms) {
          auto it = std::find(Bd1.begin(), Bd1.end(), t.m);
          if (it == Bd1.end()) throw internal_error("normal form left the standard basis");
          M.at(r, v * Bd1.size() + (std::size_t)(it - Bd1.begin())) = t.c;
        }
      }
    total += (long)Bd.size() - (long)rank(M);
  }
  return total;
}

template <class K>
bool is_gorenstein_artinian(const Ideal<K>& I) {
  return is_artinian(I) && socle_dimension(I) == 1;
}

template <class K>
bool is_complete_intersection(const Ideal<K>& I) {
  HilbertSummary h = hilbert_summary(I);
  long codim = (long)I.ring->nvars() - h.krull_dim;
  return (long)minimal_generators(I).size() == codim;
}

// Cut down by a nonzerodivisor: the quotient by I + (l) together with its
// Hilbert data. For a one-dimensional quotient this is finite and its total
// dimension equals the eventual value upstairs.
template <class K>
struct ArtinianReduction {
  Ideal<K> ideal;
  HilbertSummary hilbert;
  long total = 0;
};

template <class K>
ArtinianReduction<K> artinian_reduction(const Ideal<K>& I, const Polynomial<K>& l) {
  if (l.is_zero() || !is_nonzerodivisor(l, I)) throw input_error("NotTransverse");
  ArtinianReduction<K> out;
  out.ideal = ideal_sum(I, Ideal<K>{I.ring, {l}});
  out.hilbert = hilbert_summary(out.ideal);
  if (out.hilbert.krull_dim == 0)
    for (auto c : out.hilbert.reduced_numerator) out.total += c;
  return out;
}

struct QuotientClass {
  long dimension = 0;
  long degree = 0; // eventual value, when the function stabilizes
  bool gorenstein = false;
  bool complete_intersection = false;
};

// Structure flags of a saturated quotient. Gorenstein is read off the socle
// of the quotient itself (finite case) or of a cut by a transverse element
// (dimension one). A complete intersection is Gorenstein outright, which
// settles higher dimensions without a reduction.
template <class K>
QuotientClass classify_quotient(const Ideal<K>& Isat) {
  HilbertSummary h = hilbert_summary(Isat);
  QuotientClass out;
  out.dimension = h.krull_dim;
  if (h.eventually_constant) out.degree = h.eventual_value;
  long codim = (long)Isat.ring->nvars() - h.krull_dim;
  out.complete_intersection = (long)minimal_generators(Isat).size() == codim;
  if (h.krull_dim == 0) {
    out.gorenstein = socle_dimension(Isat) == 1;
  } else if (h.krull_dim == 1) {
    auto l = transverse_element(Isat).first;
    out.gorenstein = socle_dimension(ideal_sum(Isat, Ideal<K>{Isat.ring, {l}})) == 1;
  } else if (out.complete_intersection) {
    out.gorenstein = true;
  } else {
    throw internal_error("structure flags implemented for dimension <= 1 quotients");
  }
  return out;
}

} // namespace limsat
