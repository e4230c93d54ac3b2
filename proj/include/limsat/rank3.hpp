// Cactus rank certificates for ternary forms: annihilator slices through the
// middle degree, the square-annihilator bound, two constructive shapes, and
// the pipeline that rules out wildness for small assumed border rank.
#pragma once

#include "limsat/apolarity.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace limsat {

// A scheme-theoretic rank witness: the ideal cuts out a subscheme whose span
// contains the form.  valid() means all four independently recomputed checks
// pass; validity bounds the cactus rank of the form by `bound`.
template <class K>
struct RankCertificate {
  Polynomial<K> form;
  Ideal<K> apolar;
  long bound = 0;
  std::string route;
  bool saturated = false;
  bool one_dimensional = false;
  bool degree_within = false;
  bool annihilates_form = false;
  std::vector<std::string> notes;

  bool valid() const {
    return saturated && one_dimensional && degree_within && annihilates_form;
  }
};

// Recompute the four certificate checks from scratch, trusting nothing about
// how the ideal was built.
template <class K>
RankCertificate<K> revalidate(RankCertificate<K> c,
                              DualAction action = DualAction::contraction) {
  c.annihilates_form = true;
  for (auto& g : c.apolar.gens)
    if (!annihilates(g, c.form, action)) {
      c.annihilates_form = false;
      break;
    }
  c.saturated = is_saturated(c.apolar);
  auto hs = hilbert_summary(c.apolar);
  c.one_dimensional = hs.krull_dim == 1;
  c.degree_within = hs.eventually_constant && hs.eventual_value <= c.bound;
  return c;
}

namespace detail {

inline int mono_exp(const Monomial& m, std::size_t i) {
  return i < m.e.size() ? m.e[i] : 0;
}

inline void require_ternary(const RingPtr& R) {
  if (R->nvars() != 3 || R->has_param() || !R->standard_graded())
    throw input_error("rank machinery needs a plain standard graded ring in three variables");
}

template <class K>
long form_degree(const Polynomial<K>& F) {
  if (F.is_zero()) throw input_error("rank of the zero form");
  if (!F.is_homogeneous()) throw input_error("rank of an inhomogeneous form");
  return F.total_degree();
}

template <class K>
Polynomial<K> ppow(const Polynomial<K>& p, long e) {
  auto r = Polynomial<K>::constant(p.ring, K(1));
  for (long i = 0; i < e; ++i) r = r * p;
  return r;
}

// alpha_u^s alpha_v^(deg-s) for s = deg .. 0.
template <class K>
std::vector<Polynomial<K>> two_var_basis(const RingPtr& R, std::size_t u, std::size_t v,
                                         long deg) {
  std::vector<Polynomial<K>> out;
  for (long s = deg; s >= 0; --s)
    out.push_back(ppow(Polynomial<K>::variable(R, u), s) *
                  ppow(Polynomial<K>::variable(R, v), deg - s));
  return out;
}

// One combination of the domain annihilating B, echelon-first; everything
// annihilates once B drops below the domain degree.
template <class K>
std::optional<Polynomial<K>> contraction_kernel(const std::vector<Polynomial<K>>& dom,
                                                const Polynomial<K>& B, DualAction action) {
  if (dom.empty()) return std::nullopt;
  long degd = dom.front().total_degree();
  if (B.is_zero() || B.total_degree() < degd) return dom.front();
  auto cols = monomials_of_degree(*B.ring, Multidegree{B.total_degree() - degd});
  Mat<K> m(dom.size(), cols.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Polynomial<K> img = contract(dom[i], B, action);
    for (auto& t : img.terms) {
      auto it = std::find(cols.begin(), cols.end(), t.m);
      if (it == cols.end()) throw internal_error("contraction image escapes its degree slice");
      m.at(i, (std::size_t)(it - cols.begin())) = t.c;
    }
  }
  auto kers = kernel_basis(transpose_rows(m));
  if (kers.empty()) return std::nullopt;
  Polynomial<K> theta = Polynomial<K>::zero(dom.front().ring);
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (!is_zero(kers.front()[i])) theta = theta + kers.front()[i] * dom[i];
  return theta;
}

// One combination theta of the domain with theta . B = rhs, if the system is
// consistent.
template <class K>
std::optional<Polynomial<K>> contraction_solve(const std::vector<Polynomial<K>>& dom,
                                               const Polynomial<K>& B, const Polynomial<K>& rhs,
                                               DualAction action) {
  if (dom.empty()) return std::nullopt;
  long degd = dom.front().total_degree();
  if (B.is_zero() || B.total_degree() < degd)
    return rhs.is_zero() ? std::optional<Polynomial<K>>(Polynomial<K>::zero(dom.front().ring))
                         : std::nullopt;
  auto cols = monomials_of_degree(*B.ring, Multidegree{B.total_degree() - degd});
  Mat<K> aug(cols.size(), dom.size() + 1);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Polynomial<K> img = contract(dom[i], B, action);
    for (auto& t : img.terms) {
      auto it = std::find(cols.begin(), cols.end(), t.m);
      if (it == cols.end()) throw internal_error("contraction image escapes its degree slice");
      aug.at((std::size_t)(it - cols.begin()), i) = t.c;
    }
  }
  for (auto& t : rhs.terms) {
    auto it = std::find(cols.begin(), cols.end(), t.m);
    if (it == cols.end()) return std::nullopt;
    aug.at((std::size_t)(it - cols.begin()), dom.size()) = t.c;
  }
  auto piv = rref(aug);
  for (auto c : piv)
    if (c == dom.size()) return std::nullopt;
  Polynomial<K> theta = Polynomial<K>::zero(dom.front().ring);
  for (std::size_t r = 0; r < piv.size(); ++r)
    if (!is_zero(aug.at(r, dom.size()))) theta = theta + aug.at(r, dom.size()) * dom[piv[r]];
  return theta;
}

// Least-degree element of the annihilator supported on two variables.
template <class K>
Polynomial<K> binary_min_annihilator(const RingPtr& R, const Polynomial<K>& B, std::size_t u,
                                     std::size_t v, DualAction action) {
  if (B.is_zero()) throw internal_error("binary annihilator of the zero form");
  long d = B.total_degree();
  for (long e = 1; e <= d + 1; ++e) {
    auto k = contraction_kernel(two_var_basis<K>(R, u, v, e), B, action);
    if (k) return *k;
  }
  throw internal_error("binary annihilator search exhausted past the form degree");
}

// Certificate pieces (ideal, bound) for a form supported away from one
// variable: the missing variable plus a least-degree binary annihilator.
template <class K>
std::pair<Ideal<K>, long> binary_certificate(const RingPtr& R, const Polynomial<K>& B,
                                             std::size_t u, std::size_t v, std::size_t missing,
                                             DualAction action) {
  Polynomial<K> sigma = binary_min_annihilator(R, B, u, v, action);
  long e1 = sigma.total_degree();
  return {Ideal<K>{R, {Polynomial<K>::variable(R, missing), sigma}}, e1};
}

} // namespace detail

// Hilbert function of the apolar quotient, degrees 0..deg F.
template <class K>
std::vector<long> annihilator_hilbert(const RingPtr& R, const Polynomial<K>& F,
                                      DualAction action = DualAction::contraction) {
  detail::require_ternary<K>(R);
  long d = detail::form_degree(F);
  std::vector<long> out;
  for (long e = 0; e <= d; ++e) out.push_back(catalecticant_rank(R, F, e, action));
  return out;
}

inline bool symmetric_unimodal(const std::vector<long>& h) {
  std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i)
    if (h[i] != h[n - 1 - i]) return false;
  bool falling = false;
  for (std::size_t i = 1; i < n; ++i) {
    if (h[i] < h[i - 1]) falling = true;
    else if (h[i] > h[i - 1] && falling) return false;
  }
  return true;
}

// Element of the annihilator in degree ceil((d+1)/2) avoiding the divisor
// ell; existence is guaranteed in characteristic zero or above the degree.
template <class K>
Polynomial<K> middle_generator(const Polynomial<K>& F, const Polynomial<K>& ell,
                               DualAction action = DualAction::contraction) {
  const RingPtr& R = ell.ring;
  detail::require_ternary<K>(R);
  long d = detail::form_degree(F);
  auto md = ell.multidegree();
  if (ell.is_zero() || !md || *md != Multidegree{1})
    throw input_error("the avoided divisor must be a nonzero linear form");
  long e = (d + 2) / 2;
  Subspace<K> A = annihilator_piece(R, F, e, action);
  Subspace<K> L = ideal_piece(Ideal<K>{R, {ell}}, Multidegree{e});
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Polynomial<K> p = A.row_poly(i);
    if (!L.contains(p)) return p;
  }
  throw internal_error("every middle-degree annihilator element is divisible by the given "
                       "linear form; the characteristic is too small for degree " +
                       std::to_string(d));
}

// Complete intersection bound 2*ceil((d+1)/2) from a square in the
// annihilator.
template <class K>
RankCertificate<K> cactus_via_square(const Polynomial<K>& F, const Polynomial<K>& ell,
                                     DualAction action = DualAction::contraction) {
  const RingPtr& R = ell.ring;
  detail::require_ternary<K>(R);
  long d = detail::form_degree(F);
  Polynomial<K> sq = ell * ell;
  if (!annihilates(sq, F, action))
    throw input_error("SquareDoesNotAnnihilate: the square of the given linear form does not "
                      "annihilate the form");
  Polynomial<K> sigma = middle_generator(F, ell, action);
  RankCertificate<K> c{F, Ideal<K>{R, {sq, sigma}}, 2 * ((d + 2) / 2),
                       "square_complete_intersection"};
  return revalidate(std::move(c), action);
}

// Bound for F = a*x0*x1*x2^(d-2) + G(x0,x2) + H(x1,x2), d >= 4 when the
// mixed product is present.
template <class K>
RankCertificate<K> special_case_3(const RingPtr& R, const Polynomial<K>& F,
                                  DualAction action = DualAction::contraction) {
  detail::require_ternary<K>(R);
  long d = detail::form_degree(F);
  K a(0);
  Polynomial<K> G(F.ring), H(F.ring);
  for (auto& t : F.terms) {
    int b0 = detail::mono_exp(t.m, 0), b1 = detail::mono_exp(t.m, 1), b2 = detail::mono_exp(t.m, 2);
    if (b0 >= 1 && b1 >= 1) {
      if (b0 == 1 && b1 == 1 && b2 == d - 2) a = t.c;
      else
        throw input_error("ShapeMismatch: a monomial mixes the first two dual variables "
                          "beyond the single allowed product");
    } else if (b1 == 0) {
      G.terms.push_back(t);
    } else {
      H.terms.push_back(t);
    }
  }
  G.normalize();
  H.normalize();

  RankCertificate<K> c;
  c.form = F;
  if (is_zero(a)) {
    if (H.is_zero()) {
      auto [gamma, r] = detail::binary_certificate(R, G, 0, 2, 1, action);
      c.apolar = std::move(gamma);
      c.bound = r;
      c.route = "binary_annihilator";
    } else if (G.is_zero()) {
      auto [gamma, r] = detail::binary_certificate(R, H, 1, 2, 0, action);
      c.apolar = std::move(gamma);
      c.bound = r;
      c.route = "binary_annihilator";
    } else {
      auto [gG, rG] = detail::binary_certificate(R, G, 0, 2, 1, action);
      auto [gH, rH] = detail::binary_certificate(R, H, 1, 2, 0, action);
      c.apolar = ideal_intersect(gG, gH);
      c.bound = rG + rH;
      c.route = "binary_sum";
    }
    return revalidate(std::move(c), action);
  }

  if (d < 4)
    throw input_error("ShapeMismatch: the mixed-product construction needs degree at least four");

  auto av = [&](std::size_t j) { return Polynomial<K>::variable(R, j); };
  Polynomial<K> G2 = contract(av(0) * av(0), G, action);
  Polynomial<K> H2 = contract(av(1) * av(1), H, action);

  if (d % 2 == 0) {
    long k = d / 2;
    Polynomial<K> mixed = av(0) * av(1) * detail::ppow(av(2), k - 1);
    auto kG = detail::contraction_kernel(detail::two_var_basis<K>(R, 0, 2, k - 1), G2, action);
    auto kH = detail::contraction_kernel(detail::two_var_basis<K>(R, 1, 2, k - 1), H2, action);
    if (kG && kH) {
      c.apolar = Ideal<K>{R, {av(0) * av(0) * av(1), av(0) * av(1) * av(1),
                              av(0) * av(0) * (*kG), av(1) * av(1) * (*kH)}};
      c.bound = d + 2;
      c.route = "even_both_kernels";
      return revalidate(std::move(c), action);
    }
    // One side acts bijectively; make it the theta side.
    std::size_t u = kG ? 1 : 0, v = 1 - u;
    const Polynomial<K>& Gs = kG ? H2 : G2;
    const Polynomial<K>& Hs = kG ? G2 : H2;
    const std::optional<Polynomial<K>>& kV = kG ? kG : kH;
    RingPtr D = F.ring;
    Polynomial<K> rhs = a * detail::ppow(Polynomial<K>::variable(D, 2), k - 1);
    auto theta =
        detail::contraction_solve(detail::two_var_basis<K>(R, u, 2, k - 1), Gs, rhs, action);
    if (!theta)
      throw input_error("LinearSolveFailed: the bijective contraction step is degenerate; a "
                        "characteristic or genericity assumption is violated");
    std::optional<Polynomial<K>> eta = kV;
    bool crossed = false;
    if (!eta) {
      eta = detail::contraction_solve(detail::two_var_basis<K>(R, v, 2, k - 1), Hs, rhs, action);
      if (!eta)
        throw input_error("LinearSolveFailed: neither a kernel element nor a matching solution "
                          "exists on the second branch");
      crossed = true;
    }
    auto pure_multiple = [&](const Polynomial<K>& p) -> std::optional<K> {
      if (p.terms.size() != 1) return std::nullopt;
      const auto& m = p.terms.front().m;
      if (detail::mono_exp(m, 0) != 0 || detail::mono_exp(m, 1) != 0) return std::nullopt;
      return p.terms.front().c;
    };
    auto lam = pure_multiple(*theta), mu = pure_multiple(*eta);
    if (crossed && lam && mu) {
      Polynomial<K> tail = detail::ppow(av(2), k - 1);
      c.apolar = Ideal<K>{R, {av(u) * av(u) * av(v), av(u) * av(v) * av(v),
                              (*lam) * (av(u) * av(u) * tail) - (*mu) * (av(v) * av(v) * tail)}};
      c.bound = d + 3;
      c.route = "even_residual";
      return revalidate(std::move(c), action);
    }
    Polynomial<K> gen3 = av(u) * av(u) * (*theta) - mixed;
    Polynomial<K> gen4 = crossed ? av(v) * av(v) * (*eta) - mixed : av(v) * av(v) * (*eta);
    c.apolar = Ideal<K>{R, {av(u) * av(u) * av(v), av(u) * av(v) * av(v), gen3, gen4}};
    c.bound = d + 2;
    c.route = "even_bijective";
    return revalidate(std::move(c), action);
  }

  long k = (d - 1) / 2;
  auto theta = detail::contraction_kernel(detail::two_var_basis<K>(R, 0, 2, k), G2, action);
  auto eta = detail::contraction_kernel(detail::two_var_basis<K>(R, 1, 2, k), H2, action);
  if (!theta || !eta)
    throw internal_error("odd-degree kernel missing despite the dimension count");
  c.apolar = Ideal<K>{R, {av(0) * av(0) * av(1), av(0) * av(1) * av(1), av(0) * av(0) * (*theta),
                          av(1) * av(1) * (*eta)}};
  c.bound = d + 3;
  c.route = "odd_kernels";
  return revalidate(std::move(c), action);
}

// Bound for F = a*x0*x2^(d-1) + G(x0,x1) + H(x1,x2).
template <class K>
RankCertificate<K> special_case_4(const RingPtr& R, const Polynomial<K>& F,
                                  DualAction action = DualAction::contraction) {
  detail::require_ternary<K>(R);
  long d = detail::form_degree(F);
  K a(0);
  Polynomial<K> G(F.ring), H(F.ring);
  for (auto& t : F.terms) {
    int b0 = detail::mono_exp(t.m, 0), b1 = detail::mono_exp(t.m, 1), b2 = detail::mono_exp(t.m, 2);
    if (b0 >= 1 && b2 >= 1) {
      if (b0 == 1 && b1 == 0 && b2 == d - 1) a = t.c;
      else
        throw input_error("ShapeMismatch: a monomial mixes the outer dual variables beyond "
                          "the single allowed product");
    } else if (b2 == 0) {
      G.terms.push_back(t);
    } else {
      H.terms.push_back(t);
    }
  }
  G.normalize();
  H.normalize();

  RankCertificate<K> c;
  c.form = F;
  if (is_zero(a)) {
    if (H.is_zero()) {
      auto [gamma, r] = detail::binary_certificate(R, G, 0, 1, 2, action);
      c.apolar = std::move(gamma);
      c.bound = r;
      c.route = "binary_annihilator";
    } else if (G.is_zero()) {
      auto [gamma, r] = detail::binary_certificate(R, H, 1, 2, 0, action);
      c.apolar = std::move(gamma);
      c.bound = r;
      c.route = "binary_annihilator";
    } else {
      auto [gG, rG] = detail::binary_certificate(R, G, 0, 1, 2, action);
      auto [gH, rH] = detail::binary_certificate(R, H, 1, 2, 0, action);
      c.apolar = ideal_intersect(gG, gH);
      c.bound = rG + rH;
      c.route = "binary_sum";
    }
    return revalidate(std::move(c), action);
  }

  long e = (d + 2) / 2;
  auto av = [&](std::size_t j) { return Polynomial<K>::variable(R, j); };
  RingPtr D = F.ring;
  Polynomial<K> H1 = contract(av(1), H, action);
  Polynomial<K> rhs = a * detail::ppow(Polynomial<K>::variable(D, 2), d - e);
  auto dom = detail::two_var_basis<K>(R, 1, 2, e - 1);
  Polynomial<K> gen3(R);
  auto theta = detail::contraction_solve(dom, H1, rhs, action);
  if (theta) {
    gen3 = av(1) * (*theta) - av(0) * detail::ppow(av(2), e - 1);
  } else {
    auto kern = detail::contraction_kernel(dom, H1, action);
    if (!kern) throw internal_error("neither a solution nor a kernel element despite the "
                                    "dimension count");
    gen3 = av(1) * (*kern);
  }
  Ideal<K> part{R, {av(0) * av(0), av(0) * av(1), gen3}};
  if (G.is_zero()) {
    c.apolar = std::move(part);
    c.bound = e + 1;
    c.route = "mixed_jet";
  } else {
    auto [gG, rG] = detail::binary_certificate(R, G, 0, 1, 2, action);
    c.apolar = ideal_intersect(part, gG);
    c.bound = e + 1 + rG;
    c.route = "mixed_jet_with_binary";
  }
  return revalidate(std::move(c), action);
}

// Result of the wildness-exclusion pipeline.  The cactus bound is
// unconditional once established; the rank coincidence stated in the
// conclusion is conditional on the assumed border rank.
template <class K>
struct WildExclusionReport {
  std::string outcome;  // CactusBoundEstablished or NotApplicableInTheseCoordinates
  std::string route;    // square_annihilator, pattern_one .. pattern_four, none
  std::optional<RankCertificate<K>> certificate;
  long assumed_border_rank = 0;
  std::string conclusion;
  std::vector<std::string> notes;
};

namespace detail {

inline long det3(const std::vector<std::vector<long>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline bool is_identity3(const std::vector<std::vector<long>>& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

inline std::vector<std::vector<long>> matmul3(const std::vector<std::vector<long>>& a,
                                              const std::vector<std::vector<long>>& b) {
  std::vector<std::vector<long>> r(3, std::vector<long>(3, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline std::string matrix_note(const std::vector<std::vector<long>>& m) {
  std::string s = "coordinate change rows:";
  for (auto& row : m) {
    s += " (";
    for (std::size_t j = 0; j < row.size(); ++j)
      s += (j ? "," : "") + std::to_string(row[j]);
    s += ")";
  }
  return s;
}

// Identity, the variable permutations, and each permutation composed with an
// elementary shear; the certificates found in moved coordinates come back
// through the same matrix.
inline std::vector<std::vector<std::vector<long>>> change_candidates(
    const std::vector<std::vector<std::vector<long>>>& user) {
  std::vector<std::vector<std::vector<long>>> out;
  std::vector<std::vector<long>> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  out.push_back(id);
  for (auto& m : user)
    if (m.size() == 3 && m[0].size() == 3 && m[1].size() == 3 && m[2].size() == 3)
      out.push_back(m);
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::vector<long>>> pmats;
  for (auto& p : perms) {
    std::vector<std::vector<long>> m(3, std::vector<long>(3, 0));
    for (int i = 0; i < 3; ++i) m[i][p[i]] = 1;
    pmats.push_back(m);
    if (!is_identity3(m)) out.push_back(m);
  }
  std::vector<std::vector<std::vector<long>>> shears;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (long s : {1L, -1L}) {
        std::vector<std::vector<long>> m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        m[i][j] = s;
        shears.push_back(m);
      }
    }
  for (auto& p : pmats)
    for (auto& sh : shears) out.push_back(matmul3(p, sh));
  return out;
}

// Adjoint of the substitution alpha_i -> sum_j M[i][j] alpha_j on the dual
// side, so that membership of transformed elements in the annihilator
// becomes membership of standard monomials for the transformed form.
template <class K>
Polynomial<K> dual_change(const Polynomial<K>& F, const std::vector<std::vector<long>>& M,
                          DualAction action) {
  const RingPtr& D = F.ring;
  std::vector<Polynomial<K>> img(3, Polynomial<K>::zero(D));
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      if (M[i][k] != 0) img[k] = img[k] + K(M[i][k]) * Polynomial<K>::variable(D, i);
  if (action == DualAction::differentiation) return F.substitute(img);
  auto fact = [](long n) {
    K r(1);
    for (long i = 2; i <= n; ++i) r = r * K(i);
    return r;
  };
  Polynomial<K> acc(D);
  for (auto& t : F.terms) {
    K w(1);
    for (int i = 0; i < 3; ++i) w = w * fact(mono_exp(t.m, i));
    if (is_zero(w))
      throw internal_error("characteristic too small for the divided power substitution");
    Polynomial<K> p = Polynomial<K>::constant(D, t.c * inverse(w));
    for (int i = 0; i < 3; ++i)
      for (int rep = 0; rep < mono_exp(t.m, i); ++rep) p = p * img[i];
    acc = acc + p;
  }
  Polynomial<K> out(D);
  for (auto& t : acc.terms) {
    K w(1);
    for (int i = 0; i < 3; ++i) w = w * fact(mono_exp(t.m, i));
    out.terms.push_back({t.m, t.c * w});
  }
  out.normalize();
  return out;
}

template <class K>
std::optional<K> coefficient_of_power(const Polynomial<K>& p, std::size_t var, long deg) {
  for (auto& t : p.terms) {
    bool pure = mono_exp(t.m, var) == deg;
    for (std::size_t i = 0; pure && i < 3; ++i)
      if (i != var && mono_exp(t.m, i) != 0) pure = false;
    if (pure) return t.c;
  }
  return std::nullopt;
}

} // namespace detail

// Replays the containment case analysis behind the small-border-rank
// exclusion: tries the square shortcut and the four generator patterns in
// the given coordinates, then over user changes, permutations, and shears.
// Border rank is never computed; it enters only as the caller's assumption.
template <class K>
WildExclusionReport<K> exclude_wild(const RingPtr& R, const Polynomial<K>& F, long assumed_br,
                                    const std::vector<std::vector<std::vector<long>>>& changes = {},
                                    DualAction action = DualAction::contraction) {
  detail::require_ternary<K>(R);
  long d = detail::form_degree(F);
  if (assumed_br > d + 3)
    throw input_error("the exclusion argument covers assumed border rank at most degree plus three");
  WildExclusionReport<K> rep;
  rep.assumed_border_rank = assumed_br;

  auto hv = annihilator_hilbert(R, F, action);
  if (!symmetric_unimodal(hv))
    throw internal_error("apolar Hilbert function fails symmetry or unimodality");

  long e = (d + 2) / 2;
  auto av = [&](std::size_t j) { return Polynomial<K>::variable(R, j); };

  for (auto& M : detail::change_candidates(changes)) {
    if (detail::det3(M) == 0) {
      rep.notes.push_back("skipped a singular coordinate change");
      continue;
    }
    bool moved = !detail::is_identity3(M);
    Polynomial<K> FM = moved ? detail::dual_change(F, M, action) : F;
    auto ann = [&](const Polynomial<K>& q) { return annihilates(q, FM, action); };

    auto finish = [&](RankCertificate<K> cert, const std::string& route) -> bool {
      if (moved) {
        std::vector<Polynomial<K>> alpha_img;
        for (int i = 0; i < 3; ++i) {
          Polynomial<K> f = Polynomial<K>::zero(R);
          for (int j = 0; j < 3; ++j)
            if (M[i][j] != 0) f = f + K(M[i][j]) * av(j);
          alpha_img.push_back(f);
        }
        std::vector<Polynomial<K>> gens;
        for (auto& g : cert.apolar.gens) gens.push_back(g.substitute(alpha_img));
        cert.apolar = Ideal<K>{R, std::move(gens)};
        cert.form = F;
        cert.notes.push_back(detail::matrix_note(M));
        cert = revalidate(std::move(cert), action);
      }
      if (!cert.valid()) {
        rep.notes.push_back("a constructed certificate failed revalidation on route " + route);
        return false;
      }
      rep.outcome = "CactusBoundEstablished";
      rep.route = route;
      rep.conclusion = "cactus rank at most " + std::to_string(cert.bound) +
                       "; assuming border rank at most " + std::to_string(assumed_br) +
                       ", the cactus, smoothable, and border ranks coincide and the form is "
                       "not wild";
      rep.certificate = std::move(cert);
      return true;
    };

    if (ann(av(0) * av(0))) {
      if (finish(cactus_via_square(FM, av(0), action), "square_annihilator")) return rep;
    }

    if (ann(av(0) * av(0) * av(1)) && ann(av(0) * av(0) * av(2))) {
      Polynomial<K> eta = middle_generator(FM, av(0), action);
      Polynomial<K> red(R);
      for (auto& t : eta.terms) {
        int a0 = detail::mono_exp(t.m, 0);
        if (a0 <= 1 || a0 == e) red.terms.push_back(t);
      }
      red.normalize();
      auto pure = detail::coefficient_of_power(red, 0, e);
      if (pure) {
        if (ann(av(0) * av(0))) {
          if (finish(cactus_via_square(FM, av(0), action), "square_annihilator")) return rep;
        }
        rep.notes.push_back("pattern one found a pure-power coefficient but the square does "
                            "not annihilate");
      } else {
        RankCertificate<K> c{FM, Ideal<K>{R, {av(0) * av(0) * av(1), av(0) * av(0) * av(2), red}},
                             2 * e + 1, "initial_ideal_pattern_one"};
        if (finish(revalidate(std::move(c), action), "pattern_one")) return rep;
      }
    }

    if (ann(av(0) * av(0) * av(0)) && ann(av(0) * av(0) * av(1))) {
      Polynomial<K> eta = middle_generator(FM, av(0), action);
      Polynomial<K> red(R);
      for (auto& t : eta.terms) {
        int a0 = detail::mono_exp(t.m, 0), a1 = detail::mono_exp(t.m, 1);
        if (a0 <= 1 || (a0 == 2 && a1 == 0)) red.terms.push_back(t);
      }
      red.normalize();
      auto pure = detail::coefficient_of_power(red, 2, e);
      if (pure) {
        if (ann(av(0) * av(0))) {
          if (finish(cactus_via_square(FM, av(0), action), "square_annihilator")) return rep;
        }
        rep.notes.push_back("pattern two found a pure-power coefficient but the square does "
                            "not annihilate");
      } else {
        RankCertificate<K> c{FM,
                             Ideal<K>{R, {av(0) * av(0) * av(0), av(0) * av(0) * av(1), red}},
                             2 * e + 1, "initial_ideal_pattern_two"};
        if (finish(revalidate(std::move(c), action), "pattern_two")) return rep;
      }
    }

    if (ann(av(0) * av(0) * av(1)) && ann(av(0) * av(1) * av(1))) {
      if (finish(special_case_3(R, FM, action), "pattern_three")) return rep;
    }

    if (ann(av(0) * av(0) * av(2)) && ann(av(0) * av(1) * av(2))) {
      if (finish(special_case_4(R, FM, action), "pattern_four")) return rep;
    }
  }

  rep.outcome = "NotApplicableInTheseCoordinates";
  rep.route = "none";
  rep.conclusion = "no annihilator containment pattern held in the tried coordinates; the "
                   "rank bound was not established";
  return rep;
}

} // namespace limsat
