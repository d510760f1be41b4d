#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toriq/quasimap.hpp"

namespace toriq::testing {

inline BinaryForm form(int degree, std::initializer_list<const char*> coeffs) {
  RatVec c;
  for (const char* s : coeffs) c.push_back(parse_rational(s));
  return BinaryForm::from_coeffs(degree, c);
}

inline ProjPoint pt(const char* a, const char* b) { return ProjPoint(parse_rational(a), parse_rational(b)); }

struct RandomQuasimapOptions {
  int max_components = 3;
  std::int64_t max_length = 8;  // bound on degree_class . beta
  int max_markings = 3;
  int max_extra_basepoints = 2;  // per component
  bool quadratic_places = true;
  bool infinity_places = true;
  bool stable = false;
  double zero_section_prob = 0.15;
};

class QuasimapGenerator {
 public:
  QuasimapGenerator(FanPtr fan, RandomQuasimapOptions opt)
      : fan_(std::move(fan)), opt_(opt), h_(degree_class(*fan_)) {
    for (const auto& c : effective_classes_up_to(*fan_, h_, opt_.max_length)) by_len_[intersect(*fan_, c, h_)].push_back(c);
  }

  const Fan& fan() const { return *fan_; }

  Quasimap operator()(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      auto q = try_once(rng);
      if (q && validate_quasimap(*q).empty()) return *q;
    }
    throw std::runtime_error("random quasimap generator gave up");
  }

 private:
  int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  std::optional<CurveClass> random_class(std::mt19937_64& rng, std::int64_t budget, bool nonzero) {
    if (budget < (nonzero ? 1 : 0)) return std::nullopt;
    std::vector<const CurveClass*> pool;
    for (const auto& [len, cls] : by_len_)
      if (len <= budget && (!nonzero || len > 0))
        for (const auto& c : cls) pool.push_back(&c);
    if (pool.empty()) return std::nullopt;
    return *pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
  }

  Poly random_poly(std::mt19937_64& rng, int degree) {
    RatVec c;
    for (int i = 0; i <= degree; ++i) c.push_back(Rational(uniform(rng, -3, 3)));
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) c[0] = 1;
    return Poly(c);
  }

  ProjPoint random_point(std::mt19937_64& rng, const std::vector<ProjPoint>& avoid) {
    for (int i = 0; i < 100; ++i) {
      ProjPoint p = uniform(rng, 0, 6) == 0 ? ProjPoint::infinity() : ProjPoint::affine(Rational(uniform(rng, -4, 4), uniform(rng, 1, 2)));
      if (std::find(avoid.begin(), avoid.end(), p) == avoid.end()) return p;
    }
    throw std::runtime_error("no free point");
  }

  // Sections of class beta; rays with negative degree vanish identically.
  std::optional<Component> random_component(std::mt19937_64& rng, const CurveClass& beta,
                                            const std::optional<std::pair<ProjPoint, RatVec>>& prescribed) {
    const Fan& f = *fan_;
    Component c;
    std::vector<int> zero;
    for (int rho = 0; rho < f.num_rays(); ++rho) {
      const int d = static_cast<int>(beta[rho]);
      const bool forced = d < 0;
      const bool may = !prescribed || prescribed->second[static_cast<std::size_t>(rho)] == 0;
      if (forced && !may) return std::nullopt;
      if (forced || (may && std::bernoulli_distribution(opt_.zero_section_prob)(rng))) {
        zero.push_back(rho);
        c.sections.push_back(BinaryForm::zero(d));
        continue;
      }
      BinaryForm s(d, random_poly(rng, d));
      if (prescribed) {
        const ProjPoint& p = prescribed->first;
        Rational diff = prescribed->second[static_cast<std::size_t>(rho)] - s.eval(p);
        Poly bump = p.is_infinity() ? Poly::monomial(Rational(1), d) : Poly::constant(Rational(1));
        s = BinaryForm(d, s.affine() + bump * diff);
      }
      c.sections.push_back(s);
    }
    if (!f.is_face(RaySet(zero))) return std::nullopt;
    return c;
  }

  Place random_place(std::mt19937_64& rng, const std::vector<ProjPoint>& avoid) {
    if (opt_.quadratic_places && uniform(rng, 0, 3) == 0) {
      int a = uniform(rng, -3, 3);
      int b = a * a / 4 + 1 + uniform(rng, 0, 2);
      return Place::finite(Poly(RatVec{Rational(b), Rational(a), Rational(1)}));
    }
    auto avoid2 = avoid;
    if (!opt_.infinity_places) avoid2.push_back(ProjPoint::infinity());
    return Place::of(random_point(rng, avoid2));
  }

  std::optional<Quasimap> try_once(std::mt19937_64& rng) {
    const Fan& f = *fan_;
    Quasimap q;
    q.fan = fan_;
    const int nc = uniform(rng, 1, opt_.max_components);
    std::int64_t budget = opt_.max_length;
    std::vector<std::vector<ProjPoint>> used(static_cast<std::size_t>(nc));
    for (int j = 0; j < nc; ++j) {
      auto beta = random_class(rng, uniform(rng, 0, static_cast<int>(budget)), false);
      if (!beta) return std::nullopt;
      std::optional<std::pair<ProjPoint, RatVec>> pres;
      CurvePoint parent_pt;
      ProjPoint here;
      if (j > 0) {
        const int parent = uniform(rng, 0, j - 1);
        parent_pt = CurvePoint{parent, random_point(rng, used[static_cast<std::size_t>(parent)])};
        const auto& pc = q.components[static_cast<std::size_t>(parent)];
        if (is_basepoint(f, pc, parent_pt.point)) return std::nullopt;
        here = random_point(rng, {});
        pres = std::make_pair(here, evaluate(f, pc, parent_pt.point).values);
      }
      auto comp = random_component(rng, *beta, pres);
      if (!comp) return std::nullopt;
      budget -= intersect(f, *beta, h_);
      q.components.push_back(*comp);
      if (j > 0) {
        used[static_cast<std::size_t>(parent_pt.component)].push_back(parent_pt.point);
        used[static_cast<std::size_t>(j)].push_back(here);
        q.nodes.push_back(Node{parent_pt, CurvePoint{j, here}});
      }
    }
    const int nm = uniform(rng, 0, opt_.max_markings);
    for (int k = 0; k < nm; ++k) {
      const int j = uniform(rng, 0, nc - 1);
      ProjPoint p = random_point(rng, used[static_cast<std::size_t>(j)]);
      used[static_cast<std::size_t>(j)].push_back(p);
      q.markings.push_back(CurvePoint{j, p});
    }
    for (int j = 0; j < nc; ++j) {
      const int extra = uniform(rng, 0, opt_.max_extra_basepoints);
      for (int k = 0; k < extra; ++k) {
        Place pl = random_place(rng, used[static_cast<std::size_t>(j)]);
        if (!pl.infinity && pl.degree() == 1 &&
            std::find(used[static_cast<std::size_t>(j)].begin(), used[static_cast<std::size_t>(j)].end(), pl.point()) !=
                used[static_cast<std::size_t>(j)].end())
          continue;
        if (pl.infinity &&
            std::find(used[static_cast<std::size_t>(j)].begin(), used[static_cast<std::size_t>(j)].end(),
                      ProjPoint::infinity()) != used[static_cast<std::size_t>(j)].end())
          continue;
        auto bx = random_class(rng, budget / pl.degree(), true);
        if (!bx) continue;
        CurveClass neg = zero_class(f) - *bx;
        try {
          auto& c = q.components[static_cast<std::size_t>(j)];
          c = twist_component(f, c, pl, neg);
          budget -= pl.degree() * intersect(f, *bx, h_);
        } catch (const std::domain_error&) {
        }
      }
    }
    if (opt_.stable) make_stable(rng, q, used);
    return q;
  }

  void make_stable(std::mt19937_64& rng, Quasimap& q, std::vector<std::vector<ProjPoint>>& used) {
    for (int j = 0; j < static_cast<int>(q.components.size()); ++j) {
      auto deficit = [&] {
        const int sp = q.special_points(j) - 2;
        if (sp < 0) return -sp;
        if (sp == 0 && component_degree(*fan_, q.components[static_cast<std::size_t>(j)]).is_zero()) return 1;
        return 0;
      };
      for (int tries = 0; deficit() > 0 && tries < 50; ++tries) {
        ProjPoint p = random_point(rng, used[static_cast<std::size_t>(j)]);
        if (is_basepoint(*fan_, q.components[static_cast<std::size_t>(j)], p)) continue;
        used[static_cast<std::size_t>(j)].push_back(p);
        q.markings.push_back(CurvePoint{j, p});
      }
    }
  }

  FanPtr fan_;
  RandomQuasimapOptions opt_;
  DivisorClass h_;
  std::map<std::int64_t, std::vector<CurveClass>> by_len_;
};

}  // namespace toriq::testing
