#pragma once

#include <algorithm>
#include <random>

#include "toriq/quasimap.hpp"

namespace toriq::testing {

inline const ProjPoint zero_pt = ProjPoint::affine(Rational(0));

inline bool all_rational(const Quasimap& q) {
  for (const auto& b : basepoints(q))
    if (!b.place.is_rational()) return false;
  return true;
}

// Random tail through the extended value at a rational basepoint.
inline Component random_tail(std::mt19937_64& rng, const Quasimap& q, const BasepointPlace& b) {
  const Fan& fan = *q.fan;
  const auto ext = twist_component(fan, q.components[static_cast<std::size_t>(b.component)], b.place, b.beta);
  std::uniform_int_distribution<int> coef(-3, 3);
  Component t;
  for (int rho = 0; rho < fan.num_rays(); ++rho) {
    const int d = static_cast<int>(b.beta[rho]);
    const Rational v = ext.sections[static_cast<std::size_t>(rho)].eval(b.place.point());
    if (d < 0) {
      t.sections.push_back(BinaryForm::zero(d));
      continue;
    }
    RatVec c{v};
    for (int i = 1; i <= d; ++i) c.push_back(Rational(coef(rng)));
    if (v == 0 && d > 0 && std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; })) c[1] = 1;
    t.sections.push_back(BinaryForm(d, Poly(c)));
  }
  return t;
}

}  // namespace toriq::testing
