#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "limsat/apolarity.hpp"
#include "limsat/obstruction.hpp"

using namespace limsat;

namespace {

RingPtr R3() { return standard_ring({"a0", "a1", "a2"}); }
RingPtr R4() { return standard_ring({"a0", "a1", "a2", "a3"}); }

Ideal<Rat> I(const RingPtr& R, std::initializer_list<const char*> ss) {
  std::vector<Polynomial<Rat>> g;
  for (auto* s : ss) g.push_back(parse_poly<Rat>(R, s));
  return Ideal<Rat>{R, std::move(g)};
}

Polynomial<Rat> P(const RingPtr& R, const std::string& s) { return parse_poly<Rat>(R, s); }

Polynomial<Rat> ppow(const Polynomial<Rat>& p, long e) {
  auto q = Polynomial<Rat>::constant(p.ring, Rat(1));
  for (long i = 0; i < e; ++i) q = q * p;
  return q;
}

// Degreewise limit of three collinear points plus an embedded direction.
Ideal<Rat> three_points(const RingPtr& R) {
  return I(R, {"a0^2*a2-a0*a2^2", "a0*a1", "a1^2", "a1*a2"});
}

// Four collinear points [0:0:1:c] for c in {0,1,-1,2}, built from dual data.
// The degree-two slot is the only freedom; it decides whether the square of
// the saturation sits inside the ideal in degree two.
Ideal<Rat> four_points(const RingPtr& R, const std::string& slot) {
  RingPtr D = dual_ring(R);
  auto X = [&](int j) { return Polynomial<Rat>::variable(D, j); };
  std::vector<Rat> cs = {Rat(0), Rat(1), Rat(-1), Rat(2)};
  std::vector<Polynomial<Rat>> mu;
  for (auto& c : cs) mu.push_back(X(2) + c * X(3));
  std::map<long, std::vector<Polynomial<Rat>>> W;
  W[0] = {Polynomial<Rat>::constant(D, Rat(1))};
  W[1] = {X(0), X(1), X(2), X(3)};
  W[2] = {X(2) * X(2), X(2) * X(3), X(3) * X(3), P(D, slot)};
  for (long e = 3; e <= 4; ++e) {
    std::vector<Polynomial<Rat>> piece;
    for (auto& m : mu) piece.push_back(ppow(m, e));
    W[e] = piece;
  }
  return ideal_from_dual(R, W, 4, DualAction::differentiation);
}

Ideal<Rat> four_points_saturation(const RingPtr& R) {
  return I(R, {"a0", "a1", "a3*(a2-a3)*(a2+a3)*(2*a2-a3)"});
}

// Vanishing ideal of one reduced point from its coordinates.
Ideal<Rat> point_ideal(const RingPtr& R, const std::vector<Rat>& p) {
  std::size_t pivot = 0;
  while (pivot < p.size() && p[pivot] == Rat(0)) ++pivot;
  std::vector<Polynomial<Rat>> gens;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == pivot) continue;
    gens.push_back(p[pivot] * Polynomial<Rat>::variable(R, j) -
                   p[j] * Polynomial<Rat>::variable(R, pivot));
  }
  return Ideal<Rat>{R, std::move(gens)};
}

bool tuple_is_hom(const std::vector<std::vector<Polynomial<Rat>>>& syz,
                  const GrobnerBasis<Rat>& gbJ, const std::vector<Polynomial<Rat>>& tuple) {
  for (auto& row : syz) {
    Polynomial<Rat> acc = Polynomial<Rat>::zero(gbJ.ring);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero() && !tuple[i].is_zero()) acc = acc + row[i] * tuple[i];
    if (!normal_form(acc, gbJ).is_zero()) return false;
  }
  return true;
}

std::vector<long> hvals(const Ideal<Rat>& J, long upto) {
  std::vector<long> out;
  for (long e = 0; e <= upto; ++e) out.push_back(hilbert_value(J, e));
  return out;
}

}  // namespace

TEST_CASE("gorenstein formula on the limit of three collinear points") {
  auto R = R3();
  auto J = three_points(R);
  auto rep = obfib_dimension(J);
  CHECK(rep.method == "gorenstein_formula");
  CHECK(rep.jump_degree == 1);
  CHECK(rep.dimension == 1);
  CHECK_FALSE(rep.vanishing);
  CHECK(rep.companion == I(R, {"a1", "a0^2*a2-a0*a2^2"}));
}

TEST_CASE("saturated input reports a vanishing obstruction space") {
  auto R = R3();
  auto rep = obfib_dimension(I(R, {"a1", "a0^2*a2-a0*a2^2"}));
  CHECK(rep.dimension == 0);
  CHECK(rep.vanishing);
  // The short circuit also covers quotients of any dimension.
  auto rep2 = obfib_dimension(I(R, {"a0"}));
  CHECK(rep2.vanishing);
}

TEST_CASE("four collinear points split by the degree two slot") {
  auto R = R4();
  auto sat = four_points_saturation(R);

  auto A = four_points(R, "x0*x2");
  CHECK(hvals(A, 6) == std::vector<long>{1, 4, 4, 4, 4, 4, 4});
  CHECK(saturate(A) == sat);
  // The square of the saturation lies inside A in degree two.
  CHECK(A.contains(P(R, "a0^2")));
  CHECK(A.contains(P(R, "a0*a1")));
  CHECK(A.contains(P(R, "a1^2")));
  auto ra = obfib_dimension(A);
  CHECK(ra.method == "gorenstein_formula");
  CHECK(ra.jump_degree == 2);
  CHECK(ra.dimension == 1);

  auto B = four_points(R, "x0^2");
  CHECK(hvals(B, 6) == std::vector<long>{1, 4, 4, 4, 4, 4, 4});
  CHECK(saturate(B) == sat);
  CHECK_FALSE(B.contains(P(R, "a0^2")));
  auto rb = obfib_dimension(B);
  CHECK(rb.method == "gorenstein_formula");
  CHECK(rb.jump_degree == 2);
  CHECK(rb.dimension == 0);
  CHECK(rb.vanishing);
}

TEST_CASE("line case equivalence on random degree four divisors") {
  auto R = R3();
  std::mt19937 rng(2024);
  auto b = [&](int j) { return Polynomial<Rat>::variable(R, j); };
  for (int trial = 0; trial < 6; ++trial) {
    // Four distinct points [0:1:c] on the line b0 = 0.
    std::vector<long> pool = {-3, -2, -1, 0, 1, 2, 3};
    std::shuffle(pool.begin(), pool.end(), rng);
    auto q4 = Polynomial<Rat>::constant(R, Rat(1));
    for (int i = 0; i < 4; ++i) q4 = q4 * (Rat(pool[i]) * b(1) - b(2));
    Ideal<Rat> sat{R, {b(0), q4}};

    bool sideA = trial % 2 == 0;
    std::vector<Polynomial<Rat>> gens;
    if (sideA) {
      Rat al(static_cast<long>(rng() % 5) - 2), be(static_cast<long>(rng() % 5) - 2);
      if (al == Rat(0) && be == Rat(0)) be = Rat(1);
      gens = {b(0) * b(0), b(0) * (al * b(1) + be * b(2))};
    } else {
      Rat a1, a2, b1, b2;
      do {
        a1 = Rat(static_cast<long>(rng() % 5) - 2);
        a2 = Rat(static_cast<long>(rng() % 5) - 2);
        b1 = Rat(static_cast<long>(rng() % 5) - 2);
        b2 = Rat(static_cast<long>(rng() % 5) - 2);
      } while (a1 * b2 - a2 * b1 == Rat(0));
      gens = {b(0) * (a1 * b(1) + a2 * b(2)), b(0) * (b1 * b(1) + b2 * b(2))};
    }
    for (auto& p : ideal_piece(sat, Multidegree{3}).basis_polys()) gens.push_back(p);
    for (auto& p : ideal_piece(sat, Multidegree{4}).basis_polys()) gens.push_back(p);
    Ideal<Rat> J{R, gens};

    REQUIRE(saturate(J) == sat);
    auto rep = obfib_dimension(J);
    CHECK(rep.method == "gorenstein_formula");
    CHECK(rep.jump_degree == 2);

    auto piece_I = ideal_piece(J, Multidegree{2});
    auto piece_sat = ideal_piece(sat, Multidegree{2});
    bool inside = piece_I.contains(b(0) * b(0));
    bool proper = piece_I.dim() < piece_sat.dim();
    CHECK((rep.dimension != 0) == (inside && proper));
    CHECK(rep.dimension == (sideA ? 1 : 0));
  }
}

TEST_CASE("staircase quotient outside both formula routes") {
  auto R = R3();
  auto J = I(R, {"a0^2*a2", "a0*a1^3", "a0^2*a1^2", "a0^3*a1", "a0^5", "a1^6"});
  REQUIRE_THROWS_WITH(obfib_dimension(J), Catch::Matchers::ContainsSubstring("HypothesesNotMet"));
}

TEST_CASE("obstruction formulas need a standard graded ring") {
  auto R = make_ring({"a0", "a1", "a2"}, {{1, 1, 1}, {0, 1, 0}});
  auto J = I(R, {"a0^2"});
  REQUIRE_THROWS_WITH(obfib_dimension(J),
                      Catch::Matchers::ContainsSubstring("standard graded"));
}

TEST_CASE("obstruction formulas reject a surface dimensional quotient") {
  auto R = R3();
  auto J = I(R, {"a0^2", "a0*a1", "a0*a2"});
  REQUIRE_THROWS_WITH(obfib_dimension(J), Catch::Matchers::ContainsSubstring("dimension 2"));
}

TEST_CASE("line plus extra point needs a user companion") {
  auto R = R4();
  std::vector<std::vector<Rat>> pts = {{Rat(0), Rat(0), Rat(1), Rat(0)},
                                       {Rat(0), Rat(0), Rat(1), Rat(1)},
                                       {Rat(0), Rat(0), Rat(1), Rat(-1)},
                                       {Rat(0), Rat(0), Rat(1), Rat(2)},
                                       {Rat(1), Rat(0), Rat(0), Rat(0)}};
  Ideal<Rat> sat = point_ideal(R, pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) sat = ideal_intersect(sat, point_ideal(R, pts[i]));
  REQUIRE(hvals(sat, 4) == std::vector<long>{1, 3, 4, 5, 5});

  std::vector<Polynomial<Rat>> gens;
  for (auto& p : ideal_piece(sat, Multidegree{3}).basis_polys()) gens.push_back(p);
  for (auto& p : ideal_piece(sat, Multidegree{4}).basis_polys()) gens.push_back(p);
  Ideal<Rat> J{R, gens};
  REQUIRE(saturate(J) == sat);

  // The colon candidates all saturate back to the five points, whose Hilbert
  // function is not the collinear divisor staircase.
  REQUIRE_THROWS_WITH(obfib_dimension(J), Catch::Matchers::ContainsSubstring("HypothesesNotMet"));

  auto companion = four_points_saturation(R);
  auto rep = obfib_dimension(J, companion);
  CHECK(rep.method == "line_and_points_formula");
  CHECK(rep.jump_degree == 2);
  CHECK(rep.dimension == 4);
  CHECK(rep.companion == companion);

  // Wrong companions are rejected: the saturation itself has the wrong
  // pattern, and an ideal not containing J never qualifies.
  REQUIRE_THROWS_WITH(obfib_dimension(J, sat),
                      Catch::Matchers::ContainsSubstring("HypothesesNotMet"));
  REQUIRE_THROWS_WITH(obfib_dimension(J, point_ideal(R, {Rat(1), Rat(1), Rat(1), Rat(1)})),
                      Catch::Matchers::ContainsSubstring("HypothesesNotMet"));

  // Independent recomputation through the cokernel model.
  CHECK(obfib_table(J).zero_shift == 4);
}

TEST_CASE("cokernel model agrees with the closed forms") {
  auto R3r = R3();
  auto intro = three_points(R3r);
  auto t = obfib_table(intro);
  CHECK(t.zero_shift == 1);
  CHECK(t.dims == std::map<Multidegree, long>{{Multidegree{0}, 1}});

  auto R = R4();
  CHECK(obfib_table(four_points(R, "x0*x2")).zero_shift == 1);
  CHECK(obfib_table(four_points(R, "x0^2")).zero_shift == 0);

  // Saturated input: empty table.
  auto sat = obfib_table(I(R3r, {"a1", "a0^2*a2-a0*a2^2"}));
  CHECK(sat.zero_shift == 0);
  CHECK(sat.dims.empty());
}

TEST_CASE("cokernel model rejects a dead transverse element") {
  auto R = R3();
  auto J = three_points(R);
  REQUIRE_THROWS_WITH(obfib_table(J, P(R, "a1")),
                      Catch::Matchers::ContainsSubstring("NotTransverse"));
}

TEST_CASE("degree zero homs of a principal ideal") {
  auto R = standard_ring({"a0", "a1"});
  auto J = I(R, {"a0"});
  auto rep = hom0(J, J);
  REQUIRE(rep.generators.size() == 1);
  CHECK(rep.dimension == 1);
  REQUIRE(rep.basis.size() == 1);
  // The only image direction is the surviving degree one monomial.
  CHECK(rep.basis[0][0] == P(R, "a1"));

  // Images land in a zero piece: no homs.
  auto point = I(R, {"a0", "a1"});
  CHECK(hom0(point, point).dimension == 0);
}

TEST_CASE("hom basis elements satisfy the generator syzygies") {
  auto R = R3();
  auto Jsat = I(R, {"a0^2", "a0*a1^3", "a1^6"});
  auto rep = hom0(Jsat, Jsat);
  auto syz = syzygies(R, rep.generators);
  REQUIRE(rep.basis.size() == static_cast<std::size_t>(rep.dimension));
  for (auto& tuple : rep.basis) CHECK(tuple_is_hom(syz, Jsat.gb(), tuple));

  auto J = I(R, {"a0^2*a2", "a0*a1^3", "a0^2*a1^2", "a0^3*a1", "a0^5", "a1^6"});
  auto rep2 = hom0(J, Jsat);
  auto syz2 = syzygies(R, rep2.generators);
  for (auto& tuple : rep2.basis) CHECK(tuple_is_hom(syz2, Jsat.gb(), tuple));
}

TEST_CASE("staircase pair has a one dimensional restriction cokernel") {
  auto R = R3();
  auto J = I(R, {"a0^2*a2", "a0*a1^3", "a0^2*a1^2", "a0^3*a1", "a0^5", "a1^6"});
  auto Jsat = I(R, {"a0^2", "a0*a1^3", "a1^6"});
  REQUIRE(saturate(J) == Jsat);
  auto res = hom0_restriction(Jsat, J, Jsat);
  CHECK(res.cokernel_dimension == 1);
  CHECK(res.image_dimension == res.source_report.dimension -
                                   (res.source_report.dimension - res.image_dimension));
  // Restricted tuples really are homs on the smaller ideal.
  auto syz = syzygies(R, res.target_report.generators);
  for (auto& tuple : res.restricted) CHECK(tuple_is_hom(syz, Jsat.gb(), tuple));
}

TEST_CASE("restriction lands in the target hom space on random triples") {
  auto R = R3();
  std::mt19937 rng(99);
  auto rnd_form = [&](long deg) {
    Polynomial<Rat> p = Polynomial<Rat>::zero(R);
    for (auto& m : monomials_of_degree(*R, Multidegree{deg})) {
      long c = static_cast<long>(rng() % 5) - 2;
      if (c != 0) p = p + Polynomial<Rat>::monomial(R, m, Rat(c));
    }
    if (p.is_zero()) p = Polynomial<Rat>::monomial(R, monomials_of_degree(*R, Multidegree{deg})[0], Rat(1));
    return p;
  };
  for (int trial = 0; trial < 3; ++trial) {
    Ideal<Rat> big{R, {rnd_form(2), rnd_form(3)}};
    Polynomial<Rat> l = rnd_form(1);
    Ideal<Rat> small = ideal_product(big, Ideal<Rat>{R, {l}});
    auto res = hom0_restriction(big, small, big);
    CHECK(res.image_dimension <= res.source_report.dimension);
    CHECK(res.image_dimension + res.cokernel_dimension == res.target_report.dimension);
    auto syz = syzygies(R, res.target_report.generators);
    for (auto& tuple : res.restricted) CHECK(tuple_is_hom(syz, big.gb(), tuple));
  }
}

TEST_CASE("variable rescaling preserves the hom space of a monomial ideal") {
  auto R = R3();
  std::mt19937 rng(55);
  std::vector<Rat> scale = {Rat(2), Rat(3), Rat(5)};
  std::vector<Polynomial<Rat>> images;
  for (std::size_t j = 0; j < 3; ++j) images.push_back(scale[j] * Polynomial<Rat>::variable(R, j));

  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Polynomial<Rat>> gens;
    for (int g = 0; g < 4; ++g) {
      Monomial m;
      m.e = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
             static_cast<int>(rng() % 3)};
      if (m.total_degree() == 0) m.e[0] = 2;
      gens.push_back(Polynomial<Rat>::monomial(R, m, Rat(1)));
    }
    Ideal<Rat> K{R, gens};
    auto rep = hom0(K, K);
    if (rep.dimension == 0) continue;

    // Coordinates over the standard monomials at each generator degree.
    const auto& gbK = K.gb();
    std::vector<std::vector<Monomial>> tb;
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (auto& gp : rep.generators) {
      tb.push_back(standard_monomials(gbK, *gp.multidegree()));
      off.push_back(total);
      total += tb.back().size();
    }
    auto coordize = [&](const std::vector<Polynomial<Rat>>& tuple) {
      std::vector<Rat> v(total, Rat(0));
      for (std::size_t i = 0; i < tuple.size(); ++i)
        for (auto& t : tuple[i].terms) {
          auto it = std::find(tb[i].begin(), tb[i].end(), t.m);
          REQUIRE(it != tb[i].end());
          v[off[i] + static_cast<std::size_t>(it - tb[i].begin())] = t.c;
        }
      return v;
    };

    Mat<Rat> m(rep.basis.size() + 1, total);
    for (std::size_t r = 0; r < rep.basis.size(); ++r) {
      auto v = coordize(rep.basis[r]);
      for (std::size_t j = 0; j < total; ++j) m.at(r, j) = v[j];
    }
    REQUIRE(rank(m) == static_cast<std::size_t>(rep.dimension));

    // Conjugate each basis hom by the rescaling; it must stay in the span.
    for (auto& tuple : rep.basis) {
      std::vector<Polynomial<Rat>> conj;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        Rat lam(1);
        const Monomial& gm = rep.generators[i].leading().m;
        for (std::size_t j = 0; j < 3; ++j)
          for (int k = 0; k < gm.e[j]; ++k) lam *= scale[j];
        conj.push_back(Rat(1) / lam * tuple[i].substitute(images));
      }
      auto v = coordize(conj);
      for (std::size_t j = 0; j < total; ++j) m.at(rep.basis.size(), j) = v[j];
      CHECK(rank(m) == static_cast<std::size_t>(rep.dimension));
    }
  }
}

TEST_CASE("bigraded staircase tables match the expected supports") {
  auto R = make_ring({"a0", "a1", "a2"}, {{1, 1, 1}, {0, 1, 0}});
  auto J = I(R, {"a0^3", "a0*a1^2", "a0^2*a2", "a0*a1*a2", "a0*a2^4", "a2^6"});

  auto t = obfib_table(J, P(R, "a1"));
  CHECK(t.dims == std::map<Multidegree, long>{{Multidegree{0, -1}, 1}});
  CHECK(t.zero_shift == 0);

  auto h = hom0(J, J);
  std::map<long, long> expect = {{6, 1}, {5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 4}, {0, 3}, {-1, 2}};
  CHECK(h.bidegree_dims == expect);
  CHECK(h.dimension == 14);

  // Coarse view: the same ideal graded by total degree alone.
  auto Rc = R3();
  auto Jc = I(Rc, {"a0^3", "a0*a1^2", "a0^2*a2", "a0*a1*a2", "a0*a2^4", "a2^6"});
  auto rep = obfib_dimension(Jc);
  CHECK(rep.method == "gorenstein_formula");
  CHECK(rep.jump_degree == 4);
  CHECK(rep.dimension == 1);
  CHECK(obfib_table(Jc).zero_shift == 1);
}

TEST_CASE("verdicts for the worked examples") {
  auto R = R4();
  auto vb = verdict(four_points(R, "x0^2"));
  CHECK(vb.verdict == "EntirelyNonsaturable");
  CHECK(vb.route == "gorenstein_formula");
  CHECK(vb.obfib_dim == 0);

  auto va = verdict(four_points(R, "x0*x2"));
  CHECK(va.verdict == "Inconclusive");
  CHECK(va.obfib_dim == 1);

  auto R3r = R3();
  auto vi = verdict(three_points(R3r));
  CHECK(vi.verdict == "Inconclusive");
  CHECK(vi.obfib_dim == 1);
  REQUIRE(vi.tangent.has_value());
  CHECK(vi.tangent->cokernel_dimension > 0);

  auto vs = verdict(I(R3r, {"a1", "a0^2*a2-a0*a2^2"}));
  CHECK(vs.verdict == "Saturated");
  CHECK(vs.route == "saturation_test");
}

TEST_CASE("surjective tangent restriction under a recognized smooth point") {
  auto R = R3();
  auto J = I(R, {"a0^2", "a0*a1", "a0*a2"});

  auto v = verdict(J);
  CHECK(v.verdict == "Nonsaturable");
  CHECK(v.route == "tangent_surjectivity");
  REQUIRE_FALSE(v.assumptions.empty());
  CHECK(v.assumptions[0] ==
        "smoothness recognized: saturation is a complete intersection");

  VerdictOptions opt;
  opt.assert_smooth_Jsat = true;
  auto va = verdict(J, opt);
  CHECK(va.verdict == "Nonsaturable");
  REQUIRE_FALSE(va.assumptions.empty());
  CHECK(va.assumptions[0] == "smoothness of the saturated point asserted by the caller");
}

TEST_CASE("hom spaces demand compatible inputs") {
  auto R = R3();
  auto S = standard_ring({"b0", "b1", "b2"});
  CHECK_THROWS(hom0(I(R, {"a0"}), I(S, {"b1"})));
  REQUIRE_THROWS_WITH(hom0_restriction(I(R, {"a0"}), I(R, {"a1"}), I(R, {"a0"})),
                      Catch::Matchers::ContainsSubstring("nested"));
}
