#include <catch2/catch_amalgamated.hpp>

#include "limsat/limits.hpp"

using namespace limsat;
using Catch::Matchers::ContainsSubstring;

namespace {

RingPtr R3() { return standard_ring({"a0", "a1", "a2"}); }

std::vector<Polynomial<Rat>> P(const RingPtr& R, std::initializer_list<const char*> ss) {
  std::vector<Polynomial<Rat>> g;
  for (auto* s : ss) g.push_back(parse_poly<Rat>(R, s));
  return g;
}

Ideal<Rat> I(const RingPtr& R, std::initializer_list<const char*> ss) {
  return Ideal<Rat>{R, P(R, ss)};
}

// degree-2 slice of the ideal of the moving points (1:0:0), (1:t:1), (0:0:1)
std::vector<Polynomial<Rat>> moving_triple(const RingPtr& RT) {
  return P(RT, {"a0*a1 - t*a0*a2", "a1^2 - t^2*a0*a2", "a1*a2 - t*a0*a2"});
}

std::vector<long> values(const Ideal<Rat>& J, long upto) {
  std::vector<long> out;
  for (long e = 0; e <= upto; ++e) out.push_back(hilbert_value(J, e));
  return out;
}

UniPoly<Rat> tp(std::size_t k) { return UniPoly<Rat>::t_power(k); }

} // namespace

TEST_CASE("single form slices and their certificates") {
  auto R = R3();
  auto RT = param_ring(R);

  auto s = limit_subspace(R, P(RT, {"a0 + t*a1"}), 1L);
  CHECK(s.generic_rank == 1);
  CHECK(s.limit == degree_span(R, Multidegree{1}, P(R, {"a0"})));
  CHECK(s.certificate == UniPoly<Rat>(Rat(1)));

  // a family element divisible by t still has a nonzero limit after saturation,
  // and the certificate records that the naive fiber at t = 0 collapses
  auto v = limit_subspace(R, P(RT, {"t*a0"}), 1L);
  CHECK(v.generic_rank == 1);
  CHECK(v.limit == degree_span(R, Multidegree{1}, P(R, {"a0"})));
  CHECK(v.certificate == tp(1));
  CHECK(v.certificate.at0() == Rat(0));
  CHECK(v.certificate.eval(Rat(7)) != Rat(0));
}

TEST_CASE("quadric slice of a moving triple of points") {
  auto R = R3();
  auto RT = param_ring(R);
  auto s = limit_subspace(R, moving_triple(RT), 2L);
  CHECK(s.generic_rank == 3);
  CHECK(s.limit == degree_span(R, Multidegree{2}, P(R, {"a0*a1", "a1^2", "a1*a2"})));
  CHECK(s.certificate == tp(1));
}

TEST_CASE("slices are invariant under row operations over the parameter ring") {
  auto R = R3();
  auto RT = param_ring(R);
  auto fam = moving_triple(RT);
  auto t = parse_poly<Rat>(RT, "t");
  std::vector<Polynomial<Rat>> mixed{fam[0] + t * fam[1], fam[1], t * fam[2]};
  auto a = limit_subspace(R, fam, 2L);
  auto b = limit_subspace(R, mixed, 2L);
  CHECK(a.generic_rank == b.generic_rank);
  CHECK(a.limit == b.limit);
}

TEST_CASE("degenerate families") {
  auto R = R3();
  auto RT = param_ring(R);

  auto e = limit_subspace(R, std::vector<Polynomial<Rat>>{}, 2L);
  CHECK(e.generic_rank == 0);
  CHECK(e.limit.dim() == 0);

  std::vector<Polynomial<Rat>> with_zero{Polynomial<Rat>::zero(RT), parse_poly<Rat>(RT, "a0")};
  auto z = limit_subspace(R, with_zero, 1L);
  CHECK(z.generic_rank == 1);

  // plain elements and parameter-ring elements may be mixed in one family
  std::vector<Polynomial<Rat>> both{parse_poly<Rat>(R, "a0"), parse_poly<Rat>(RT, "t*a1")};
  auto m = limit_subspace(R, both, 1L);
  CHECK(m.generic_rank == 2);
  CHECK(m.limit == degree_span(R, Multidegree{1}, P(R, {"a0", "a1"})));
}

TEST_CASE("family element errors") {
  auto R = R3();
  auto RT = param_ring(R);
  REQUIRE_THROWS_WITH(limit_subspace(R, P(RT, {"a0 + a0*a1"}), 1L),
                      ContainsSubstring("not homogeneous"));
  REQUIRE_THROWS_WITH(limit_subspace(R, P(RT, {"a0*a1"}), 1L),
                      ContainsSubstring("not homogeneous"));
  auto other = standard_ring({"b0", "b1"});
  REQUIRE_THROWS_WITH(limit_subspace(R, P(other, {"b0"}), 1L),
                      ContainsSubstring("different ring"));
  REQUIRE_THROWS_WITH(limit_subspace(RT, P(RT, {"a0"}), 1L),
                      ContainsSubstring("plain ring"));
}

TEST_CASE("verify certifies straight families") {
  auto R = R3();
  auto F = P(R, {"a0", "a1"});
  auto rep = verify_limit_forms(R, F, F, {0, 0});
  CHECK(rep.ok);
  CHECK(rep.limit.dim() == 2);
  CHECK(rep.certificate == UniPoly<Rat>(Rat(1)));

  auto RT = param_ring(R);
  auto fam = moving_triple(RT);
  auto moving = verify_limit_forms(R, fam, fam, {0, 0, 0});
  REQUIRE(moving.ok);
  CHECK(moving.limit == limit_subspace(R, fam, 2L).limit);
}

TEST_CASE("verify tracks powers of the parameter") {
  auto R = R3();
  auto RT = param_ring(R);
  auto F = P(RT, {"t*a0"});
  auto G = P(R, {"a0"});

  auto ok = verify_limit_forms(R, F, G, {1});
  REQUIRE(ok.ok);
  CHECK(ok.certificate == tp(1));
  CHECK(ok.limit == degree_span(R, Multidegree{1}, G));

  auto bad = verify_limit_forms(R, F, G, {0});
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure == "MembershipFails");
  CHECK(bad.failing_index == 0);
}

TEST_CASE("verify demands exact module membership") {
  auto R = R3();
  auto RT = param_ring(R);
  auto F = P(RT, {"a0*a1 - t*a0*a2"});
  // the naive limit form is not an element of the module for any power of t
  for (long d : {0L, 1L, 3L}) {
    auto rep = verify_limit_forms(R, F, P(R, {"a0*a1"}), {d});
    CHECK_FALSE(rep.ok);
    CHECK(rep.failure == "MembershipFails");
  }
  auto rep = verify_limit_forms(R, F, F, {0});
  REQUIRE(rep.ok);
  CHECK(rep.limit == degree_span(R, Multidegree{2}, P(R, {"a0*a1"})));
}

TEST_CASE("verify reports dependent limits and failing indices") {
  auto R = R3();
  auto RT = param_ring(R);
  auto F = P(R, {"a0", "a1"});

  auto dup = verify_limit_forms(R, F, P(R, {"a0", "a0"}), {0, 0});
  CHECK_FALSE(dup.ok);
  CHECK(dup.failure == "DependentLimits");

  // membership holds but the fibers at t = 0 coincide
  auto slide = verify_limit_forms(R, F, P(RT, {"a0", "a0 + t*a1"}), {0, 0});
  CHECK_FALSE(slide.ok);
  CHECK(slide.failure == "DependentLimits");

  auto miss = verify_limit_forms(R, F, P(R, {"a0", "a2"}), {0, 0});
  CHECK_FALSE(miss.ok);
  CHECK(miss.failure == "MembershipFails");
  CHECK(miss.failing_index == 1);
}

TEST_CASE("verify input errors") {
  auto R = R3();
  auto F = P(R, {"a0"});
  REQUIRE_THROWS_WITH(verify_limit_forms(R, std::vector<Polynomial<Rat>>{}, F, {}),
                      ContainsSubstring("nonempty"));
  REQUIRE_THROWS_WITH(verify_limit_forms(R, F, P(R, {"a0", "a1"}), {0, 0}),
                      ContainsSubstring("equal length"));
  REQUIRE_THROWS_WITH(verify_limit_forms(R, F, F, {-1}),
                      ContainsSubstring("nonnegative"));
}

TEST_CASE("limit ideal of the moving triple from generators") {
  auto R = R3();
  auto RT = param_ring(R);
  auto out = limit_ideal(R, moving_triple(RT), 4);
  CHECK(out.hilbert == std::vector<long>{1, 3, 3, 3, 3});
  CHECK(out.generators_within_bound);
  CHECK(out.ideal == I(R, {"a0^2*a2 - a0*a2^2", "a0*a1", "a1^2", "a1*a2"}));

  auto sat = saturate(out.ideal);
  CHECK(sat == I(R, {"a1", "a0^2*a2 - a0*a2^2"}));
  CHECK(values(sat, 4) == std::vector<long>{1, 2, 3, 3, 3});
}

TEST_CASE("limit ideal of the moving triple from points") {
  auto R = R3();
  std::vector<TRow<Rat>> pts{
      {UniPoly<Rat>(Rat(1)), UniPoly<Rat>(), UniPoly<Rat>()},
      {UniPoly<Rat>(Rat(1)), tp(1), UniPoly<Rat>(Rat(1))},
      {UniPoly<Rat>(), UniPoly<Rat>(), UniPoly<Rat>(Rat(1))}};
  auto out = limit_ideal_points(R, pts, 4);
  CHECK(out.hilbert == std::vector<long>{1, 3, 3, 3, 3});
  CHECK(out.ideal == I(R, {"a0^2*a2 - a0*a2^2", "a0*a1", "a1^2", "a1*a2"}));

  // flatness: the fiber at t = 1 is three points in general position with the
  // same Hilbert values in the bounded range
  auto fib = ideal_intersect(ideal_intersect(I(R, {"a1", "a2"}), I(R, {"a0 - a1", "a1 - a2"})),
                             I(R, {"a0", "a1"}));
  CHECK(values(fib, 4) == std::vector<long>{1, 3, 3, 3, 3});
}

TEST_CASE("colliding pair of points leaves a doubled point") {
  auto R = standard_ring({"a0", "a1"});
  std::vector<TRow<Rat>> pts{{UniPoly<Rat>(Rat(1)), UniPoly<Rat>()},
                             {UniPoly<Rat>(Rat(1)), tp(1)}};
  auto out = limit_ideal_points(R, pts, 3);
  CHECK(out.hilbert == std::vector<long>{1, 2, 2, 2});
  CHECK(out.ideal == I(R, {"a1^2"}));
  CHECK(out.generators_within_bound);
  CHECK(is_saturated(out.ideal));
}

TEST_CASE("constant points reduce to the exact intersection") {
  auto R = R3();
  auto one = UniPoly<Rat>(Rat(1));
  auto nil = UniPoly<Rat>();
  std::vector<TRow<Rat>> pts{{one, nil, nil}, {nil, one, nil}, {nil, nil, one}, {one, one, one}};
  auto out = limit_ideal_points(R, pts, 4);
  CHECK(out.hilbert == std::vector<long>{1, 3, 4, 4, 4});
  auto cap = ideal_intersect(
      ideal_intersect(I(R, {"a1", "a2"}), I(R, {"a0", "a2"})),
      ideal_intersect(I(R, {"a0", "a1"}), I(R, {"a0 - a1", "a1 - a2"})));
  CHECK(out.ideal == cap);
  CHECK(is_saturated(out.ideal));
}

TEST_CASE("point set input errors") {
  auto R = R3();
  auto one = UniPoly<Rat>(Rat(1));
  auto nil = UniPoly<Rat>();
  std::vector<TRow<Rat>> none;
  std::vector<TRow<Rat>> narrow{{one, nil}};
  std::vector<TRow<Rat>> vanishing{{nil, nil, nil}};
  std::vector<TRow<Rat>> lone{{one, nil, nil}};
  REQUIRE_THROWS_WITH(limit_ideal_points(R, none, 2), ContainsSubstring("no points"));
  REQUIRE_THROWS_WITH(limit_ideal_points(R, narrow, 2), ContainsSubstring("coordinate count"));
  REQUIRE_THROWS_WITH(limit_ideal_points(R, vanishing, 2),
                      ContainsSubstring("zero coordinates"));
  // projectively equal for every t: (1, t, 0) and (t, t^2, 0)
  std::vector<TRow<Rat>> prop{{one, tp(1), nil}, {tp(1), tp(2), nil}};
  REQUIRE_THROWS_WITH(limit_ideal_points(R, prop, 2),
                      ContainsSubstring("PointsCollideIdentically"));
  REQUIRE_THROWS_WITH(limit_ideal_points(R, lone, -1), ContainsSubstring("nonnegative"));
  auto bigraded = make_ring({"a0", "a1"}, {{1, 0}, {0, 1}});
  std::vector<TRow<Rat>> pair{{one, one}};
  REQUIRE_THROWS_WITH(limit_ideal_points(bigraded, pair, 2),
                      ContainsSubstring("single grading row"));
}

TEST_CASE("five points moving onto a line") {
  auto R = standard_ring({"a0", "a1", "a2", "a3", "a4"});
  auto c = [](long num, long den) { return UniPoly<Rat>(Rat(num, den)); };
  auto ct = [](long num, long den, std::size_t k) {
    return UniPoly<Rat>::t_power(k, Rat(num, den));
  };
  std::vector<TRow<Rat>> pts{
      {c(0, 1), ct(1, 1, 2), ct(1, 1, 2), c(-1, 1), c(1, 1)},
      {c(0, 1), c(0, 1), ct(1, 1, 2), c(1, 1), c(1, 1)},
      {ct(1, 8, 1), c(0, 1), c(0, 1), c(-2, 1), c(1, 1)},
      {ct(1, 8, 1), c(0, 1), c(0, 1), c(2, 1), c(1, 1)},
      {ct(-1, 24, 1), ct(2, 3, 2), c(0, 1), c(0, 1), c(1, 1)}};
  auto out = limit_ideal_points(R, pts, 4);
  CHECK(out.hilbert == std::vector<long>{1, 5, 5, 5, 5});
  // the limit ideal is far from saturated: the points collapse onto the line
  // a0 = a1 = a2 = 0, where five distinct points would only cut Hilbert value 2
  // in degree one
  auto sat = saturate(out.ideal);
  CHECK(hilbert_value(sat, 1L) == 2);
  CHECK_FALSE(out.ideal == sat);
}
