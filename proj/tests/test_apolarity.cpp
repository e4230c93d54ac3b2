#include <catch2/catch_amalgamated.hpp>

#include "limsat/apolarity.hpp"
#include "oracles.hpp"

using namespace limsat;

namespace {

RingPtr R3() { return standard_ring({"a0", "a1", "a2"}); }

Polynomial<Rat> factorial_rescale(const Polynomial<Rat>& F) {
  Polynomial<Rat> out(F.ring);
  for (auto& t : F.terms) {
    Rat c = t.c;
    for (auto e : t.m.e)
      for (int k = 2; k <= e; ++k) c = c * Rat(k);
    out.terms.push_back({t.m, c});
  }
  out.normalize();
  return out;
}

} // namespace

TEST_CASE("contraction acts monomial by monomial") {
  auto R = R3();
  auto D = dual_ring(R);
  auto act = [&](const char* s, const char* f) {
    return contract(parse_poly<Rat>(R, s), parse_poly<Rat>(D, f));
  };
  CHECK(act("a0", "x0*x1") == parse_poly<Rat>(D, "x1"));
  CHECK(act("a0", "x1^2").is_zero());
  CHECK(act("a0^2", "x0^2*x2") == parse_poly<Rat>(D, "x2"));
  CHECK(act("a0 + a1", "x0*x1") == parse_poly<Rat>(D, "x0 + x1"));
}

TEST_CASE("differentiation needs characteristic zero") {
  auto R = R3();
  auto D = dual_ring(R);
  CHECK(contract(parse_poly<Rat>(R, "a0"), parse_poly<Rat>(D, "x0^2"),
                 DualAction::differentiation) == parse_poly<Rat>(D, "2*x0"));
  auto Rp = make_ring({"a0", "a1", "a2"}, {{1, 1, 1}}, 7);
  auto Dp = dual_ring(Rp);
  REQUIRE_THROWS_WITH(contract(parse_poly<GF>(Rp, "a0"), parse_poly<GF>(Dp, "x0^2"),
                               DualAction::differentiation),
                      Catch::Matchers::ContainsSubstring("characteristic zero"));
}

TEST_CASE("annihilator of a pure power") {
  auto R = R3();
  auto D = dual_ring(R);
  for (long d : {3L, 5L}) {
    Polynomial<Rat> F = parse_poly<Rat>(D, "x0");
    Polynomial<Rat> Fd = Polynomial<Rat>::constant(D, Rat(1));
    for (long i = 0; i < d; ++i) Fd = Fd * F;
    auto A = annihilator(R, Fd, d + 1);
    std::vector<Polynomial<Rat>> expect{parse_poly<Rat>(R, "a1"), parse_poly<Rat>(R, "a2")};
    Polynomial<Rat> top = Polynomial<Rat>::constant(R, Rat(1));
    for (long i = 0; i <= d; ++i) top = top * parse_poly<Rat>(R, "a0");
    expect.push_back(top);
    CHECK(A == Ideal<Rat>{R, expect});
  }
  CHECK(annihilates(parse_poly<Rat>(R, "a0^2"), parse_poly<Rat>(D, "x1^4")));
}

TEST_CASE("catalecticant ranks of quartics") {
  auto R = R3();
  auto D = dual_ring(R);
  std::mt19937 rng(23);
  auto F = oracles::random_form(D, 4, rng);
  std::vector<long> ranks;
  for (long e = 0; e <= 4; ++e) ranks.push_back(catalecticant_rank(R, F, e));
  CHECK(ranks == std::vector<long>{1, 3, 6, 3, 1});
  for (long e = 0; e <= 4; ++e)
    CHECK(catalecticant_rank(R, F, e) == catalecticant_rank(R, F, 4 - e));

  auto special = parse_poly<Rat>(D, "x0^4 + x1^4 + x2^4");
  std::vector<long> sr;
  for (long e = 0; e <= 4; ++e) sr.push_back(catalecticant_rank(R, special, e));
  CHECK(sr == std::vector<long>{1, 3, 3, 3, 1});
}

TEST_CASE("annihilator pieces complement the hilbert function") {
  auto R = R3();
  auto D = dual_ring(R);
  std::mt19937 rng(5);
  auto F = oracles::random_form(D, 5, rng);
  auto A = annihilator(R, F, 6);
  for (long e = 0; e <= 5; ++e) {
    long all = (long)monomials_of_degree(*R, Multidegree{e}).size();
    CHECK((long)annihilator_piece(R, F, e).dim() + catalecticant_rank(R, F, e) == all);
    CHECK(hilbert_value(A, e) == catalecticant_rank(R, F, e));
  }
}

TEST_CASE("perp of a coordinate slice") {
  auto R = R3();
  auto D = dual_ring(R);
  auto V = degree_span(R, Multidegree{1},
                       std::vector<Polynomial<Rat>>{parse_poly<Rat>(R, "a0"),
                                                    parse_poly<Rat>(R, "a1")});
  auto W = perp(V, D);
  REQUIRE(W.dim() == 1);
  CHECK(W.contains(parse_poly<Rat>(D, "x2")));
}

TEST_CASE("perp squares to the identity") {
  auto R = R3();
  auto D = dual_ring(R);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Polynomial<Rat>> gens{oracles::random_form(R, 3, rng),
                                      oracles::random_form(R, 3, rng)};
    auto V = degree_span(R, Multidegree{3}, gens);
    CHECK(perp(perp(V, D), R) == V);
  }
}

TEST_CASE("point ideals perp to spans of point powers") {
  auto R = R3();
  auto D = dual_ring(R);
  // [1:0:0], [1:1:1], [0:0:1]
  std::vector<std::vector<Rat>> pts{{Rat(1), Rat(0), Rat(0)},
                                    {Rat(1), Rat(1), Rat(1)},
                                    {Rat(0), Rat(0), Rat(1)}};
  Ideal<Rat> P1{R, {parse_poly<Rat>(R, "a1"), parse_poly<Rat>(R, "a2")}};
  Ideal<Rat> P2{R, {parse_poly<Rat>(R, "a0 - a2"), parse_poly<Rat>(R, "a1 - a2")}};
  Ideal<Rat> P3{R, {parse_poly<Rat>(R, "a0"), parse_poly<Rat>(R, "a1")}};
  auto I = ideal_intersect(ideal_intersect(P1, P2), P3);
  for (long e = 2; e <= 4; ++e) {
    std::vector<Polynomial<Rat>> powers;
    for (auto& p : pts) powers.push_back(power_of_point(D, p, e));
    auto expect = degree_span(D, Multidegree{e}, powers);
    CHECK(perp(ideal_piece(I, e), D) == expect);
  }
}

TEST_CASE("point powers pair as evaluation") {
  auto R = R3();
  auto D = dual_ring(R);
  std::mt19937 rng(41);
  std::vector<Rat> p{Rat(2), Rat(-1), Rat(3)};
  for (long e : {2L, 3L}) {
    auto sigma = oracles::random_form(R, e, rng);
    auto F = power_of_point(D, p, e);
    auto paired = contract(sigma, F);
    REQUIRE(paired.terms.size() <= 1);
    Rat value(0);
    for (auto& t : sigma.terms) {
      Rat c = t.c;
      for (std::size_t i = 0; i < 3; ++i)
        for (int k = 0; k < t.m.e[i]; ++k) c = c * p[i];
      value = value + c;
    }
    Rat got = paired.terms.empty() ? Rat(0) : paired.terms[0].c;
    CHECK(got == value);
  }
}

TEST_CASE("contraction and differentiation annihilators agree after rescaling") {
  auto R = R3();
  auto D = dual_ring(R);
  std::mt19937 rng(59);
  for (long d : {3L, 4L, 6L}) {
    auto F = oracles::random_form(D, d, rng);
    auto Ad = annihilator(R, F, d + 1, DualAction::differentiation);
    auto Ac = annihilator(R, factorial_rescale(F), d + 1, DualAction::contraction);
    CHECK(Ad == Ac);
  }
}

TEST_CASE("ideal from a single point functional") {
  auto R = R3();
  auto D = dual_ring(R);
  std::map<long, std::vector<Polynomial<Rat>>> pieces;
  pieces[0] = {Polynomial<Rat>::constant(D, Rat(1))};
  pieces[1] = {parse_poly<Rat>(D, "x0")};
  pieces[2] = {parse_poly<Rat>(D, "x0^2")};
  pieces[3] = {parse_poly<Rat>(D, "x0^3")};
  auto I = ideal_from_dual(R, pieces, 3);
  CHECK(I == Ideal<Rat>{R, {parse_poly<Rat>(R, "a1"), parse_poly<Rat>(R, "a2")}});
}

TEST_CASE("dual pieces must be closed under contraction") {
  auto R = R3();
  auto D = dual_ring(R);
  std::map<long, std::vector<Polynomial<Rat>>> pieces;
  pieces[0] = {Polynomial<Rat>::constant(D, Rat(1))};
  pieces[1] = {parse_poly<Rat>(D, "x1")};
  pieces[2] = {parse_poly<Rat>(D, "x0^2")};
  REQUIRE_THROWS_WITH(ideal_from_dual(R, pieces, 2),
                      Catch::Matchers::ContainsSubstring("NotClosedUnderContraction"));
}

TEST_CASE("five variable cubic family member") {
  auto R = standard_ring({"a0", "a1", "a2", "a3", "a4"});
  auto D = dual_ring(R);
  auto f = [&](const char* s) { return parse_poly<Rat>(D, s); };
  // five distinct directions on the x3,x4 line
  std::vector<Polynomial<Rat>> mu{f("x4 - x3"), f("x4 + x3"), f("x4 - 2*x3"),
                                  f("x4 + 2*x3"), f("x4")};
  auto pow = [&](const Polynomial<Rat>& l, long e) {
    Polynomial<Rat> r = Polynomial<Rat>::constant(D, Rat(1));
    for (long i = 0; i < e; ++i) r = r * l;
    return r;
  };
  auto line_slice = [&](long e) {
    std::vector<Polynomial<Rat>> out;
    out.push_back(pow(f("x3"), e));
    for (long k = 1; k <= e; ++k) out.push_back(pow(f("x3"), e - k) * pow(f("x4"), k));
    return out;
  };
  Polynomial<Rat> c = f("x0") * f("x3^2") + f("x1") * f("x3*x4") + f("x2") * f("x4^2");

  std::map<long, std::vector<Polynomial<Rat>>> pieces;
  pieces[0] = {Polynomial<Rat>::constant(D, Rat(1))};
  pieces[1] = {f("x0"), f("x1"), f("x2"), f("x3"), f("x4")};
  pieces[2] = line_slice(2);
  for (std::size_t v = 3; v <= 4; ++v)
    pieces[2].push_back(contract(Polynomial<Rat>::variable(R, v), c,
                                 DualAction::differentiation));
  pieces[3] = line_slice(3);
  pieces[3].push_back(c);
  pieces[4] = line_slice(4);
  pieces[5] = {};
  for (auto& m : mu) pieces[5].push_back(pow(m, 5));

  auto I = ideal_from_dual(R, pieces, 5, DualAction::differentiation);
  for (long e = 1; e <= 5; ++e) CHECK(hilbert_value(I, e) == 5);
  auto h = hilbert_summary(I);
  CHECK(h.krull_dim == 1);
  CHECK(h.eventual_value == 5);
}
