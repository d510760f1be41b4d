#include "toriq/class_lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "toriq/linalg.hpp"

namespace toriq {

bool CurveClass::is_zero() const {
  return std::all_of(pairings.begin(), pairings.end(), [](std::int64_t v) { return v == 0; });
}

CurveClass& CurveClass::operator+=(const CurveClass& o) {
  if (o.pairings.size() != pairings.size()) throw std::invalid_argument("curve classes of different fans");
  for (std::size_t i = 0; i < pairings.size(); ++i) pairings[i] += o.pairings[i];
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& o) {
  if (o.pairings.size() != pairings.size()) throw std::invalid_argument("curve classes of different fans");
  for (std::size_t i = 0; i < pairings.size(); ++i) pairings[i] -= o.pairings[i];
  return *this;
}

CurveClass operator*(std::int64_t k, CurveClass a) {
  for (auto& v : a.pairings) v *= k;
  return a;
}

namespace {

std::string ivec(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

std::string to_string(const CurveClass& b) { return ivec(b.pairings); }
std::string to_string(const DivisorClass& d) { return ivec(d.coords); }

std::vector<int> anchor_rays(const Fan& fan, int anchor_cone) {
  std::vector<int> out;
  const auto& c = fan.cone(anchor_cone);
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    if (!c.contains(rho)) out.push_back(rho);
  return out;
}

CurveClass make_curve_class(const Fan& fan, IntVec pairings) {
  if (static_cast<int>(pairings.size()) != fan.num_rays())
    throw std::invalid_argument("curve class needs " + std::to_string(fan.num_rays()) + " pairings, got " +
                                std::to_string(pairings.size()));
  for (int i = 0; i < fan.dim(); ++i) {
    std::int64_t s = 0;
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      s += pairings[static_cast<std::size_t>(rho)] * fan.ray(rho)[static_cast<std::size_t>(i)];
    if (s != 0) throw std::invalid_argument("pairings " + ivec(pairings) + " violate sum d_rho u_rho = 0");
  }
  return CurveClass{std::move(pairings)};
}

CurveClass zero_class(const Fan& fan) { return CurveClass{IntVec(static_cast<std::size_t>(fan.num_rays()), 0)}; }

IntVec anchor_coordinates(const Fan& fan, const CurveClass& beta) {
  IntVec out;
  for (int rho : anchor_rays(fan)) out.push_back(beta[rho]);
  return out;
}

CurveClass class_from_anchor(const Fan& fan, const IntVec& coords) {
  auto ar = anchor_rays(fan);
  if (coords.size() != ar.size()) throw std::invalid_argument("wrong number of anchor coordinates");
  IntVec a(static_cast<std::size_t>(fan.num_rays()), 0);
  for (std::size_t k = 0; k < ar.size(); ++k) a[static_cast<std::size_t>(ar[k])] = coords[k];
  return beta_a_sigma(fan, a, 0);
}

DivisorClass divisor_class(const Fan& fan, int rho, int anchor_cone) {
  auto ar = anchor_rays(fan, anchor_cone);
  DivisorClass d{anchor_cone, IntVec(ar.size(), 0)};
  auto it = std::find(ar.begin(), ar.end(), rho);
  if (it != ar.end()) {
    d.coords[static_cast<std::size_t>(it - ar.begin())] = 1;
    return d;
  }
  const auto& cone = fan.cone(anchor_cone).indices();
  auto pos = static_cast<std::size_t>(std::find(cone.begin(), cone.end(), rho) - cone.begin());
  if (pos == cone.size()) throw std::invalid_argument("no such ray");
  const auto& m = fan.dual_basis(anchor_cone)[pos];
  for (std::size_t k = 0; k < ar.size(); ++k) d.coords[k] = -fan.pairing(m, ar[k]);
  return d;
}

DivisorClass divisor_from_rays(const Fan& fan, const IntVec& a, int anchor_cone) {
  if (static_cast<int>(a.size()) != fan.num_rays()) throw std::invalid_argument("wrong number of ray coefficients");
  DivisorClass d{anchor_cone, IntVec(static_cast<std::size_t>(fan.picard_rank()), 0)};
  for (int rho = 0; rho < fan.num_rays(); ++rho) {
    if (a[static_cast<std::size_t>(rho)] == 0) continue;
    auto dr = divisor_class(fan, rho, anchor_cone);
    for (std::size_t k = 0; k < d.coords.size(); ++k) d.coords[k] += a[static_cast<std::size_t>(rho)] * dr.coords[k];
  }
  return d;
}

DivisorClass to_anchor(const Fan& fan, const DivisorClass& d, int anchor_cone) {
  if (d.anchor_cone < 0 || d.anchor_cone >= fan.num_cones()) throw std::invalid_argument("anchor cone out of range");
  auto ar = anchor_rays(fan, d.anchor_cone);
  if (d.coords.size() != ar.size()) throw std::invalid_argument("divisor class has wrong number of coordinates");
  if (d.anchor_cone == anchor_cone) return d;
  IntVec a(static_cast<std::size_t>(fan.num_rays()), 0);
  for (std::size_t k = 0; k < ar.size(); ++k) a[static_cast<std::size_t>(ar[k])] = d.coords[k];
  return divisor_from_rays(fan, a, anchor_cone);
}

DivisorClass anticanonical(const Fan& fan) {
  return divisor_from_rays(fan, IntVec(static_cast<std::size_t>(fan.num_rays()), 1));
}

std::int64_t intersect(const Fan& fan, const CurveClass& beta, const DivisorClass& d) {
  auto ar = anchor_rays(fan, d.anchor_cone);
  if (d.coords.size() != ar.size()) throw std::invalid_argument("divisor class has wrong number of coordinates");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < ar.size(); ++k) s += d.coords[k] * beta[ar[k]];
  return s;
}

RatVec beta_a_sigma(const Fan& fan, const RatVec& a, int cone) {
  if (static_cast<int>(a.size()) != fan.num_rays()) throw std::invalid_argument("wrong number of ray values");
  const auto& s = fan.cone(cone);
  const auto& dual = fan.dual_basis(cone);
  RatVec d(a.size());
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    if (!s.contains(rho)) d[static_cast<std::size_t>(rho)] = a[static_cast<std::size_t>(rho)];
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational v = 0;
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (!s.contains(rho)) v -= a[static_cast<std::size_t>(rho)] * fan.pairing(dual[i], rho);
    d[static_cast<std::size_t>(s.indices()[i])] = v;
  }
  return d;
}

CurveClass beta_a_sigma(const Fan& fan, const IntVec& a, int cone) {
  if (static_cast<int>(a.size()) != fan.num_rays()) throw std::invalid_argument("wrong number of ray values");
  const auto& s = fan.cone(cone);
  const auto& dual = fan.dual_basis(cone);
  IntVec d(a.size(), 0);
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    if (!s.contains(rho)) d[static_cast<std::size_t>(rho)] = a[static_cast<std::size_t>(rho)];
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::int64_t v = 0;
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (!s.contains(rho)) v -= a[static_cast<std::size_t>(rho)] * fan.pairing(dual[i], rho);
    d[static_cast<std::size_t>(s.indices()[i])] = v;
  }
  return CurveClass{std::move(d)};
}

std::vector<CurveClass> wall_curve_classes(const Fan& fan) {
  std::vector<CurveClass> out;
  for (const auto& w : fan.walls()) out.push_back(CurveClass{w.relation});
  return out;
}

std::vector<CurveClass> mori_generators(const Fan& fan) {
  auto w = wall_curve_classes(fan);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

namespace {

IntMatrix wall_rows(const Fan& fan) {
  IntMatrix rows;
  for (const auto& c : mori_generators(fan)) rows.push_back(anchor_coordinates(fan, c));
  return rows;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_projective(const Fan& fan) {
  if (!is_projective(fan))
    throw std::invalid_argument("fan is not projective: the nef cone is not full-dimensional");
}

}  // namespace

std::vector<DivisorClass> nef_cone_rays(const Fan& fan) {
  std::vector<DivisorClass> out;
  for (auto& r : cone_extreme_rays(wall_rows(fan), static_cast<std::size_t>(fan.picard_rank())))
    out.push_back(DivisorClass{0, std::move(r)});
  return out;
}

bool is_projective(const Fan& fan) {
  IntMatrix rays;
  for (const auto& d : nef_cone_rays(fan)) rays.push_back(d.coords);
  return rank(to_rational(rays)) == static_cast<std::size_t>(fan.picard_rank());
}

bool is_effective(const Fan& fan, const CurveClass& beta) {
  // Mori cone is the dual of the nef cone
  auto coords = anchor_coordinates(fan, beta);
  for (const auto& n : nef_cone_rays(fan))
    if (dot(n.coords, coords) < 0) return false;
  return true;
}

bool is_nef(const Fan& fan, const DivisorClass& d) {
  for (const auto& w : mori_generators(fan))
    if (intersect(fan, w, d) < 0) return false;
  return true;
}

bool is_ample(const Fan& fan, const DivisorClass& d) {
  for (const auto& w : mori_generators(fan))
    if (intersect(fan, w, d) <= 0) return false;
  return true;
}

bool is_fano(const Fan& fan) { return is_ample(fan, anticanonical(fan)); }

std::optional<DivisorClass> ample_class(const Fan& fan) {
  DivisorClass sum{0, IntVec(static_cast<std::size_t>(fan.picard_rank()), 0)};
  for (const auto& n : nef_cone_rays(fan))
    for (std::size_t k = 0; k < sum.coords.size(); ++k) sum.coords[k] += n.coords[k];
  if (!is_ample(fan, sum)) return std::nullopt;
  return sum;
}

std::vector<DivisorClass> nef_hilbert_basis(const Fan& fan) {
  auto rays = nef_cone_rays(fan);
  const auto p = static_cast<std::size_t>(fan.picard_rank());
  IntMatrix walls = wall_rows(fan);
  // Irreducible elements lie in the zonotope spanned by the extreme rays;
  // search its bounding box.
  RatMatrix a;
  RatVec b;
  for (const auto& w : walls) {
    RatVec row;
    for (auto v : w) row.push_back(make_rational(v));
    a.push_back(row);
    b.push_back(0);
  }
  for (std::size_t j = 0; j < p; ++j) {
    std::int64_t lo = 0, hi = 0;
    for (const auto& r : rays) {
      lo += std::min<std::int64_t>(0, r.coords[j]);
      hi += std::max<std::int64_t>(0, r.coords[j]);
    }
    RatVec up(p), down(p);
    up[j] = 1;
    down[j] = -1;
    a.push_back(up);
    b.push_back(make_rational(lo));
    a.push_back(down);
    b.push_back(make_rational(-hi));
  }
  auto cand = polytope_lattice_points(a, b);
  auto in_cone = [&](const IntVec& x) {
    for (const auto& w : walls)
      if (dot(w, x) < 0) return false;
    return true;
  };
  std::vector<DivisorClass> out;
  for (const auto& x : cand) {
    if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) continue;
    bool irreducible = true;
    for (const auto& h : cand) {
      if (h == x || std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v == 0; })) continue;
      IntVec diff(p);
      for (std::size_t j = 0; j < p; ++j) diff[j] = x[j] - h[j];
      if (in_cone(diff)) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) out.push_back(DivisorClass{0, x});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t length(const CurveClass& beta) {
  std::int64_t s = 0;
  for (auto v : beta.pairings) s += v;
  return s;
}

std::vector<CurveClass> effective_classes_below(const Fan& fan, const CurveClass& beta) {
  require_projective(fan);
  if (!is_effective(fan, beta)) throw std::invalid_argument("class " + to_string(beta) + " is not effective");
  auto top = anchor_coordinates(fan, beta);
  RatMatrix a;
  RatVec b;
  for (const auto& n : nef_cone_rays(fan)) {
    RatVec row, neg;
    for (auto v : n.coords) {
      row.push_back(make_rational(v));
      neg.push_back(make_rational(-v));
    }
    a.push_back(row);
    b.push_back(0);
    a.push_back(neg);
    b.push_back(make_rational(-dot(n.coords, top)));
  }
  std::vector<CurveClass> out;
  for (const auto& x : polytope_lattice_points(a, b)) out.push_back(class_from_anchor(fan, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveClass> effective_classes_up_to(const Fan& fan, const DivisorClass& h0, std::int64_t bound) {
  DivisorClass h = to_anchor(fan, h0);
  if (!is_ample(fan, h)) throw std::invalid_argument("degree class must be ample");
  RatMatrix a;
  RatVec b;
  for (const auto& n : nef_cone_rays(fan)) {
    RatVec row;
    for (auto v : n.coords) row.push_back(make_rational(v));
    a.push_back(row);
    b.push_back(0);
  }
  RatVec hrow;
  for (auto v : h.coords) hrow.push_back(make_rational(-v));
  a.push_back(hrow);
  b.push_back(make_rational(-bound));
  std::vector<CurveClass> out;
  if (bound < 0) return out;
  for (const auto& x : polytope_lattice_points(a, b)) out.push_back(class_from_anchor(fan, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<CurveClass, CurveClass>> factorizations(const Fan& fan, const CurveClass& beta) {
  if (beta.is_zero()) throw std::invalid_argument("factorizations of the zero class");
  std::vector<std::pair<CurveClass, CurveClass>> out;
  for (const auto& g : effective_classes_below(fan, beta)) {
    if (g.is_zero() || g == beta) continue;
    CurveClass rest = beta - g;
    if (g <= rest) out.emplace_back(g, rest);
  }
  return out;
}

bool is_irreducible(const Fan& fan, const CurveClass& beta) {
  return !beta.is_zero() && factorizations(fan, beta).empty();
}

DivisorClass degree_class(const Fan& fan) {
  if (is_fano(fan)) return anticanonical(fan);
  auto a = ample_class(fan);
  if (!a) throw std::invalid_argument("fan is not projective");
  return *a;
}

bool relaxed_surjectivity_condition(const Fan& fan, std::optional<std::int64_t> bound) {
  if (!bound) throw std::invalid_argument("relaxed surjectivity condition needs a degree bound");
  for (const auto& beta : effective_classes_up_to(fan, degree_class(fan), *bound)) {
    if (beta.is_zero() || is_irreducible(fan, beta)) continue;
    for (int rho = 0; rho < fan.num_rays(); ++rho) {
      if (beta[rho] != 1) continue;
      bool other = false;
      for (int r2 = 0; r2 < fan.num_rays(); ++r2)
        if (r2 != rho && beta[r2] > 0) other = true;
      if (!other) return false;
    }
  }
  return true;
}

}  // namespace toriq
