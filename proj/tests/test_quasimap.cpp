#include <random>

#include "doctest.h"
#include "quasimap_support.hpp"
#include "toriq/catalog.hpp"
#include "toriq/examples.hpp"

using namespace toriq;
using namespace toriq::testing;

namespace {

Quasimap single(FanPtr fan, std::vector<BinaryForm> s, std::vector<ProjPoint> marks = {}) {
  Quasimap q;
  q.fan = std::move(fan);
  q.components.push_back(Component{std::move(s)});
  for (const auto& m : marks) q.markings.push_back(CurvePoint{0, m});
  return q;
}

Quasimap p2_example(std::vector<ProjPoint> marks = {}) { return examples::p2_line(marks); }
using examples::segre_q1;
using examples::segre_q2;
Quasimap family(const char* t) { return examples::family_map(parse_rational(t)); }

}  // namespace

TEST_CASE("projective points and places") {
  CHECK(pt("2", "4") == ProjPoint::affine(Rational(2)));
  CHECK(pt("0", "5") == ProjPoint::infinity());
  CHECK_THROWS_AS(pt("0", "0"), std::invalid_argument);
  CHECK(to_string(pt("3", "1")) == "[1:1/3]");
  CHECK(Place::of(pt("1", "2")).factor == Poly::linear_root(Rational(2)));
  CHECK(Place::of(pt("1", "2")).point() == pt("1", "2"));
  CHECK_THROWS_AS(Place::finite(Poly(RatVec{Rational(-1), Rational(0), Rational(1)})), std::invalid_argument);
  CHECK(Place::finite(Poly(RatVec{Rational(2), Rational(0), Rational(2)})).degree() == 2);
  CHECK(Place::of(pt("1", "0")) < Place::at_infinity());
}

TEST_CASE("binary forms") {
  auto f = form(3, {"0", "1", "-1", "0"});  // x0^2 x1 - x0 x1^2
  CHECK(f.affine() == Poly(RatVec{Rational(0), Rational(1), Rational(-1)}));
  CHECK(to_string(f) == "x0^2*x1 - x0*x1^2");
  CHECK(f.eval(pt("1", "2")) == -2);
  CHECK(f.eval(ProjPoint::infinity()) == 0);
  CHECK(f.order_at(Place::at_infinity()).value() == 1);
  CHECK(f.order_at(Place::of(pt("1", "0"))).value() == 1);
  CHECK(f.order_at(Place::of(pt("1", "1"))).value() == 1);
  CHECK(f.order_at(Place::of(pt("1", "5"))).value() == 0);
  CHECK(BinaryForm::zero(2).order_at(Place::at_infinity()).is_inf());
  auto g = f.twisted(Place::at_infinity(), -1);
  CHECK(g.degree() == 2);
  CHECK_THROWS_AS(g.twisted(Place::at_infinity(), -1), std::domain_error);
  auto quad = Place::finite(Poly(RatVec{Rational(1), Rational(0), Rational(1)}));
  auto h = f.twisted(quad, 2);
  CHECK(h.degree() == 7);
  CHECK(h.order_at(quad).value() == 2);
  CHECK(h.twisted(quad, -2) == f);
  CHECK_THROWS_AS(f.twisted(quad, -1), std::domain_error);
  CHECK_THROWS_AS(form(1, {"1"}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryForm(-1, Poly::constant(Rational(1))), std::invalid_argument);
  CHECK(BinaryForm::zero(-2).coeffs().empty());
  CHECK(pow(form(1, {"1", "1"}), 2) == form(2, {"1", "2", "1"}));
}

TEST_CASE("validation") {
  CHECK(validate_quasimap(p2_example()).empty());
  auto bad = single(catalog::projective_space(2), {BinaryForm::zero(1), BinaryForm::zero(1), BinaryForm::zero(1)});
  auto rep = validate_quasimap(bad);
  REQUIRE(!rep.empty());
  CHECK(rep[0].find("primitive collection") != std::string::npos);
  CHECK(validate_quasimap(family("0")).empty());
  CHECK(validate_quasimap(family("3")).empty());

  auto q = p2_example({ProjPoint::infinity()});
  CHECK(!validate_quasimap(q).empty());  // marking at the basepoint
  q = p2_example({pt("1", "0"), pt("1", "0")});
  CHECK(!validate_quasimap(q).empty());
  q = single(catalog::projective_space(2), {form(1, {"1", "0"}), form(2, {"1", "0", "0"}), form(1, {"0", "1"})});
  CHECK(!validate_quasimap(q).empty());  // degree relation
  q = single(catalog::projective_space(2), {form(1, {"1", "0"}), form(1, {"0", "1"})});
  CHECK(!validate_quasimap(q).empty());

  auto fam = family("0");
  fam.nodes.clear();
  CHECK(!validate_quasimap(fam).empty());  // not connected
  fam = family("0");
  fam.components[1].sections[1] = form(2, {"1", "1", "0"});
  auto r = validate_quasimap(fam);
  REQUIRE(r.size() == 1);
  CHECK(r[0].find("different points") != std::string::npos);
  CHECK_THROWS_AS(require_valid(fam), QuasimapError);
}

TEST_CASE("basepoints and regular extension") {
  auto q = p2_example();
  auto b = basepoints(q);
  REQUIRE(b.size() == 1);
  CHECK(b[0].place.infinity);
  CHECK(b[0].beta == CurveClass{{1, 1, 1}});
  auto r = regular_extension(q);
  CHECK(basepoints(r).empty());
  CHECK(r.components[0].sections[2] == form(0, {"1"}));
  CHECK(degrees(q).total == CurveClass{{1, 1, 1}});
  CHECK(degrees(r).total.is_zero());
  CHECK(evaluate(q, 0, pt("1", "1")).coords == evaluate(r, 0, pt("1", "1")).coords);

  auto q1 = segre_q1();
  auto b1 = basepoints(q1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].place == Place::of(pt("1", "0")));
  CHECK(b1[0].beta == CurveClass{{0, 0, 1, 1}});
  CHECK(b1[1].place.infinity);
  CHECK(b1[1].beta == CurveClass{{1, 1, 0, 0}});
  CHECK(degrees(q1).total == CurveClass{{2, 2, 2, 2}});
  auto diag = single(catalog::p1xp1(), {form(1, {"1", "0"}), form(1, {"0", "1"}), form(1, {"1", "0"}), form(1, {"0", "1"})});
  auto r1 = regular_extension(q1);
  CHECK(same_morphism(*q1.fan, r1.components[0], diag.components[0]));
  CHECK(same_morphism(*q1.fan, regular_extension(segre_q2()).components[0], diag.components[0]));
  auto b2 = basepoints(segre_q2());
  CHECK(b2[0].beta == CurveClass{{1, 1, 0, 0}});
  CHECK(b2[1].beta == CurveClass{{0, 0, 1, 1}});

  CHECK(basepoints(family("2")).empty());
  CHECK(regular_extension(family("2")).components[0].sections[3] == family("2").components[0].sections[3]);
}

TEST_CASE("basepoint at an irreducible quadratic place") {
  auto p1 = catalog::projective_space(1);
  // (z^2+1) * (1, z): the place z^2+1 has degree 1 in A_1 and place degree 2
  auto q = single(p1, {form(3, {"1", "0", "1", "0"}), form(3, {"0", "1", "0", "1"})});
  auto b = basepoints(q);
  REQUIRE(b.size() == 1);
  CHECK(b[0].place.degree() == 2);
  CHECK(b[0].beta == CurveClass{{1, 1}});
  CHECK(degrees(regular_extension(q)).total == CurveClass{{1, 1}});
}

TEST_CASE("stability") {
  auto q = p2_example({pt("1", "0"), pt("1", "1")});
  CHECK(stability(q, StabilityMode::quasimap));
  CHECK(!stability(regular_extension(q), StabilityMode::map));
  CHECK_THROWS_AS(stability(q, StabilityMode::map), std::invalid_argument);
  auto line = single(catalog::projective_space(2), {form(1, {"1", "0"}), form(1, {"0", "1"}), BinaryForm::zero(1)});
  CHECK(stability(line, StabilityMode::map));
  CHECK(!stability(line, StabilityMode::quasimap));
  auto constant = single(catalog::projective_space(2), {form(0, {"1"}), form(0, {"1"}), form(0, {"1"})},
                         {pt("1", "0"), pt("0", "1")});
  CHECK(!stability(constant, StabilityMode::quasimap));
  constant.markings.push_back(CurvePoint{0, pt("1", "1")});
  CHECK(stability(constant, StabilityMode::quasimap));
  CHECK(stability(family("0"), StabilityMode::map));
  CHECK(!stability(family("0"), StabilityMode::quasimap));  // C2 is a rational tail
  auto f2 = catalog::hirzebruch(2);
  auto on_f2 = single(f2, {form(0, {"1"}), form(0, {"1"}), form(0, {"1"}), form(0, {"1"})},
                      {pt("1", "0"), pt("0", "1"), pt("1", "1")});
  CHECK_THROWS_AS(stability(on_f2, StabilityMode::map), std::invalid_argument);
  CHECK(stability(on_f2, StabilityMode::map, ample_class(*f2)));
}

TEST_CASE("evaluation") {
  auto q = p2_example();
  auto e = evaluate(q, 0, pt("1", "1"));
  CHECK(q.fan->cone(e.cone) == RaySet{0, 1});  // z2 != 0
  CHECK(e.coords == RatVec{Rational(0), Rational(0)});
  CHECK_THROWS_AS(evaluate(q, 0, ProjPoint::infinity()), std::invalid_argument);
  auto id = single(catalog::projective_space(1), {form(1, {"1", "0"}), form(1, {"0", "1"})});
  CHECK(evaluate(id, 0, pt("1", "1")).coords == RatVec{Rational(1)});
  auto q1 = segre_q1();
  auto a = evaluate(q1, 0, pt("1", "1"));
  auto diag = single(catalog::p1xp1(), {form(1, {"1", "0"}), form(1, {"0", "1"}), form(1, {"1", "0"}), form(1, {"0", "1"})});
  CHECK(same_point(*q1.fan, a, evaluate(diag, 0, pt("1", "1"))));
  CHECK(!same_point(*q1.fan, a, evaluate(diag, 0, pt("1", "2"))));
  CHECK(same_point(*q1.fan, evaluate(q1, 0, pt("1", "3")), evaluate(diag, 0, pt("1", "3"))));
}

TEST_CASE("equality of quasimaps") {
  CHECK(!equal_quasimaps(segre_q1(), segre_q2()));
  CHECK(equal_quasimaps(segre_q1(), segre_q1()));
  auto fam = family("0");
  auto scaled = fam;
  for (auto& c : scaled.components) c = act_by_torus(*fam.fan, c, RatVec{Rational(3), Rational(-1, 2)});
  CHECK(equal_quasimaps(fam, scaled));
  CHECK(!equal_quasimaps(fam, family("1")));
  auto moved = fam;
  moved.markings[1].point = pt("1", "2");
  CHECK_THROWS_AS(equal_quasimaps(fam, moved), std::invalid_argument);
}

TEST_CASE("random quasimaps: invariants") {
  std::mt19937_64 rng(31);
  for (auto fan : {catalog::projective_space(2), catalog::bl0p2(), catalog::p1xp1(), catalog::hirzebruch(2)}) {
    QuasimapGenerator gen(fan, RandomQuasimapOptions{});
    int with_bp = 0, quad = 0;
    for (int it = 0; it < 60; ++it) {
      auto q = gen(rng);
      auto bps = basepoints(q);
      with_bp += !bps.empty();
      CurveClass sum = degrees(regular_extension(q)).total;
      for (const auto& b : bps) {
        quad += b.place.degree() == 2;
        sum += static_cast<std::int64_t>(b.place.degree()) * b.beta;
        CHECK(b.beta == degree_at_point(*fan, b.ord).beta);
        CHECK(is_effective(*fan, b.beta));
        CHECK(!b.beta.is_zero());
      }
      CHECK(sum == degrees(q).total);
      auto r = regular_extension(q);
      CHECK(basepoints(r).empty());
      CHECK(validate_quasimap(r).empty());
      CHECK(equal_quasimaps(regular_extension(r), r));
      for (const auto& c : degrees(q).per_component) CHECK(is_effective(*fan, c));
      CHECK(equal_quasimaps(q, q));
      auto g = q;
      for (auto& c : g.components) {
        RatVec t;
        for (int k = 0; k < fan->picard_rank(); ++k) t.push_back(Rational(std::uniform_int_distribution<int>(1, 5)(rng), 2));
        c = act_by_torus(*fan, c, t);
      }
      CHECK(equal_quasimaps(q, g));
    }
    CHECK(with_bp > 10);
    if (fan->name() == "P2") CHECK(quad > 0);
  }
}
