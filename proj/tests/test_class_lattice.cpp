#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "toriq/catalog.hpp"
#include "toriq/class_lattice.hpp"

using namespace toriq;

namespace {

const CurveClass S{{1, 0, 0, 1}};
const CurveClass E{{0, 1, 1, -1}};
const CurveClass L{{1, 1, 1, 0}};

std::vector<FanPtr> fano_fans() {
  using namespace catalog;
  return {projective_space(1), projective_space(2), projective_space(3), p1xp1(), bl0p2(), dp7(), dp6(),
          product_of_projective_spaces({2, 1}), product_of_projective_spaces({1, 1, 1})};
}

std::vector<FanPtr> all_fans() {
  auto f = fano_fans();
  f.push_back(catalog::hirzebruch(2));
  f.push_back(catalog::hirzebruch(3));
  return f;
}

}  // namespace

TEST_CASE("curve class construction checks the lattice relation") {
  auto bl = catalog::bl0p2();
  CHECK(make_curve_class(*bl, {0, 1, 1, -1}) == E);
  CHECK_THROWS_AS(make_curve_class(*bl, {1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_curve_class(*bl, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("divisor classes in the anchor basis") {
  auto p2 = catalog::projective_space(2);
  CHECK(divisor_class(*p2, 2).coords == IntVec{1});
  CHECK(divisor_class(*p2, 0).coords == IntVec{1});
  auto bl = catalog::bl0p2();
  CHECK(anchor_rays(*bl) == std::vector<int>{0, 2});
  CHECK(divisor_class(*bl, 0).coords == IntVec{1, 0});
  CHECK(divisor_class(*bl, 1).coords == IntVec{0, 1});
  CHECK(divisor_class(*bl, 2).coords == IntVec{0, 1});
  CHECK(divisor_class(*bl, 3).coords == IntVec{1, -1});
  // [D0] = L, [D1] = [D2] = S, [D3] = E read off via pairings with S, E
  CHECK(intersect(*bl, S, divisor_class(*bl, 3)) == 1);
  CHECK(intersect(*bl, E, divisor_class(*bl, 3)) == -1);
}

TEST_CASE("pairings agree with coordinate contraction") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (const auto& f : all_fans())
    for (const auto& w : wall_curve_classes(*f))
      for (int it = 0; it < 10; ++it) {
        IntVec a(static_cast<std::size_t>(f->num_rays()));
        std::int64_t direct = 0;
        for (int rho = 0; rho < f->num_rays(); ++rho) {
          a[static_cast<std::size_t>(rho)] = coef(rng);
          direct += a[static_cast<std::size_t>(rho)] * w[rho];
        }
        int anchor = static_cast<int>(rng() % static_cast<unsigned>(f->num_cones()));
        auto d = divisor_from_rays(*f, a, anchor);
        CHECK(intersect(*f, w, d) == direct);
        CHECK(intersect(*f, w, to_anchor(*f, d)) == direct);
      }
}

TEST_CASE("beta(a, sigma)") {
  auto p2 = catalog::projective_space(2);
  CHECK(beta_a_sigma(*p2, IntVec{0, 0, 1}, 0) == CurveClass{{1, 1, 1}});
  auto bl = catalog::bl0p2();
  CHECK(beta_a_sigma(*bl, IntVec{0, 0, 1, 0}, 0) == E);
  CHECK(beta_a_sigma(*bl, IntVec{0, 0, 0, 0}, 2).is_zero());
  RatVec half{Rational(1, 2), 0, 0, 0};
  auto r = beta_a_sigma(*bl, half, 0);
  CHECK(r[3] == Rational(1, 2));
}

TEST_CASE("inequalities for beta(a, sigma) detect cone membership") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (const auto& f : all_fans())
    for (int it = 0; it < 40; ++it) {
      IntVec a(static_cast<std::size_t>(f->num_rays()));
      for (auto& v : a) v = coef(rng);
      IntVec u(static_cast<std::size_t>(f->dim()), 0);
      for (int rho = 0; rho < f->num_rays(); ++rho)
        for (int i = 0; i < f->dim(); ++i) u[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(rho)] * f->ray(rho)[static_cast<std::size_t>(i)];
      auto located = locate_cones(*f, u);
      for (int c = 0; c < f->num_cones(); ++c) {
        auto b = beta_a_sigma(*f, a, c);
        bool ineq = true;
        for (int rho : f->cone(c))
          if (a[static_cast<std::size_t>(rho)] < b[rho]) ineq = false;
        bool inside = std::find(located.begin(), located.end(), c) != located.end();
        CHECK(ineq == inside);
      }
    }
}

TEST_CASE("wall classes") {
  CHECK(wall_curve_classes(*catalog::projective_space(2)) == std::vector<CurveClass>(3, CurveClass{{1, 1, 1}}));
  auto bl = catalog::bl0p2();
  auto w = wall_curve_classes(*bl);
  REQUIRE(w.size() == 4);
  CHECK(w == std::vector<CurveClass>{L, S, S, E});  // walls rho0, rho1, rho2, rho3
  auto pp = wall_curve_classes(*catalog::p1xp1());
  std::multiset<CurveClass> got(pp.begin(), pp.end());
  CHECK(got.count(CurveClass{{1, 1, 0, 0}}) == 2);
  CHECK(got.count(CurveClass{{0, 0, 1, 1}}) == 2);
}

TEST_CASE("cone tests") {
  auto bl = catalog::bl0p2();
  CHECK(is_fano(*bl));
  auto k = anticanonical(*bl);
  CHECK(intersect(*bl, S, k) == 2);
  CHECK(intersect(*bl, E, k) == 1);
  auto s_div = divisor_class(*bl, 2);
  CHECK(is_nef(*bl, s_div));
  CHECK(!is_ample(*bl, s_div));
  CHECK(is_effective(*bl, zero_class(*bl)));
  CHECK(is_effective(*bl, E));
  CHECK(!is_effective(*bl, zero_class(*bl) - E));
  CHECK(!is_effective(*bl, S - E));
  CHECK(!is_fano(*catalog::hirzebruch(2)));
  CHECK(is_projective(*catalog::hirzebruch(3)));
  CHECK(ample_class(*catalog::hirzebruch(3)).has_value());
  for (const auto& f : all_fans()) CHECK(ample_class(*f).has_value());
}

TEST_CASE("nef Hilbert bases") {
  CHECK(nef_hilbert_basis(*catalog::projective_space(2)) == std::vector<DivisorClass>{{0, {1}}});
  auto bl = catalog::bl0p2();
  // S = [D2], L = [D0]
  CHECK(nef_hilbert_basis(*bl) == std::vector<DivisorClass>{divisor_class(*bl, 2), divisor_class(*bl, 0)});
  auto pp = catalog::p1xp1();
  CHECK(nef_hilbert_basis(*pp) == std::vector<DivisorClass>{divisor_class(*pp, 3), divisor_class(*pp, 1)});
}

TEST_CASE("nef Hilbert basis generates and is minimal in a box") {
  for (const auto& f : all_fans()) {
    if (f->picard_rank() > 3) continue;
    auto hb = nef_hilbert_basis(*f);
    const auto p = static_cast<std::size_t>(f->picard_rank());
    const int box = 4;
    std::set<IntVec> nef, generated;
    IntVec x(p, -box);
    while (true) {
      if (is_nef(*f, DivisorClass{0, x})) nef.insert(x);
      std::size_t j = 0;
      while (j < p && x[j] == box) x[j++] = -box;
      if (j == p) break;
      ++x[j];
    }
    generated.insert(IntVec(p, 0));
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto g : std::vector<IntVec>(generated.begin(), generated.end()))
        for (const auto& h : hb) {
          IntVec s(p);
          for (std::size_t j = 0; j < p; ++j) s[j] = g[j] + h.coords[j];
          if (nef.count(s) && generated.insert(s).second) grew = true;
        }
    }
    CHECK(generated == nef);
    for (const auto& h : hb)
      for (const auto& y : nef) {
        if (y == IntVec(p, 0) || y == h.coords) continue;
        IntVec rest(p);
        for (std::size_t j = 0; j < p; ++j) rest[j] = h.coords[j] - y[j];
        CHECK(!(nef.count(rest) && rest != IntVec(p, 0)));
      }
  }
}

TEST_CASE("length") {
  CHECK(length(E) == 1);
  CHECK(length(S) == 2);
  CHECK(length(L) == 3);
  CHECK(length(CurveClass{{1, 1, 1}}) == 3);
  CHECK(length(zero_class(*catalog::bl0p2())) == 0);
}

TEST_CASE("factorizations") {
  auto bl = catalog::bl0p2();
  auto fl = factorizations(*bl, L);
  REQUIRE(fl.size() == 1);
  CHECK(fl[0] == std::make_pair(E, S));
  CHECK(is_irreducible(*bl, S));
  CHECK(is_irreducible(*bl, E));
  auto p2 = catalog::projective_space(2);
  CurveClass line{{1, 1, 1}};
  CHECK(factorizations(*p2, 2 * line) == std::vector<std::pair<CurveClass, CurveClass>>{{line, line}});
  CHECK(factorizations(*p2, line).empty());
  CHECK_THROWS_AS(factorizations(*bl, S - E), std::invalid_argument);
}

TEST_CASE("effective classes of bounded length are sums of wall classes") {
  for (const auto& f : fano_fans()) {
    const std::int64_t bound = 6;
    auto eff = effective_classes_up_to(*f, anticanonical(*f), bound);
    std::set<CurveClass> sums{zero_class(*f)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto c : std::vector<CurveClass>(sums.begin(), sums.end()))
        for (const auto& w : mori_generators(*f)) {
          auto s = c + w;
          if (length(s) <= bound && sums.insert(s).second) grew = true;
        }
    }
    CHECK(std::set<CurveClass>(eff.begin(), eff.end()) == sums);
    for (const auto& c : eff) {
      CHECK(length(c) >= 0);
      CHECK((length(c) == 0) == c.is_zero());
    }
  }
}

TEST_CASE("length is additive on factorizations") {
  auto f = catalog::dp7();
  for (const auto& beta : effective_classes_up_to(*f, anticanonical(*f), 5)) {
    if (beta.is_zero()) continue;
    for (const auto& [a, b] : factorizations(*f, beta)) {
      CHECK(length(a) + length(b) == length(beta));
      CHECK(length(a) < length(beta));
    }
  }
}

TEST_CASE("relaxed surjectivity condition") {
  for (const auto& f : fano_fans()) CHECK(relaxed_surjectivity_condition(*f, 6));
  CHECK_THROWS_AS(relaxed_surjectivity_condition(*catalog::hirzebruch(2), std::nullopt), std::invalid_argument);
  CHECK(relaxed_surjectivity_condition(*catalog::hirzebruch(2), 8));
}
