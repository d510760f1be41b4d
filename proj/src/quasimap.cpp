#include "toriq/quasimap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toriq {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

Rational rpow(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return Rational(0);
  }
  const auto k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

bool cone_valid(const Fan& fan, const RatVec& values, int cone) {
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    if (!fan.cone(cone).contains(rho) && values[static_cast<std::size_t>(rho)] == 0) return false;
  return true;
}

RatVec chart_coords(const Fan& fan, const RatVec& values, int cone) {
  RatVec out;
  for (const auto& m : fan.dual_basis(cone)) {
    Rational z(1);
    for (int rho = 0; rho < fan.num_rays(); ++rho) z *= rpow(values[static_cast<std::size_t>(rho)], fan.pairing(m, rho));
    out.push_back(z);
  }
  return out;
}

bool relation_holds(const Fan& fan, const IntVec& d) {
  for (int i = 0; i < fan.dim(); ++i) {
    std::int64_t s = 0;
    for (int rho = 0; rho < fan.num_rays(); ++rho) s += d[static_cast<std::size_t>(rho)] * fan.ray(rho)[static_cast<std::size_t>(i)];
    if (s != 0) return false;
  }
  return true;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

IntVec Component::degrees() const {
  IntVec d;
  for (const auto& s : sections) d.push_back(s.degree());
  return d;
}

RaySet Component::vanishing() const {
  std::vector<int> v;
  for (std::size_t i = 0; i < sections.size(); ++i)
    if (sections[i].is_zero()) v.push_back(static_cast<int>(i));
  return RaySet(v);
}

int Quasimap::special_points(int component) const {
  int n = 0;
  for (const auto& m : markings) n += m.component == component;
  for (const auto& e : nodes) n += (e.a.component == component) + (e.b.component == component);
  return n;
}

std::vector<int> Quasimap::neighbours(int component) const {
  std::vector<int> out;
  for (const auto& e : nodes) {
    if (e.a.component == component) out.push_back(e.b.component);
    if (e.b.component == component) out.push_back(e.a.component);
  }
  return out;
}

QuasimapError::QuasimapError(std::vector<std::string> violations)
    : std::invalid_argument("invalid quasimap: " + join(violations)), violations_(std::move(violations)) {}

OrderVector orders_at(const Component& c, const Place& place) {
  OrderVector ord;
  for (const auto& s : c.sections) ord.orders.push_back(s.order_at(place));
  return ord;
}

bool is_basepoint(const Fan& fan, const Component& c, const ProjPoint& pt) {
  return !is_non_basepoint(fan, orders_at(c, Place::of(pt)));
}

std::vector<std::string> validate_quasimap(const Quasimap& q) {
  std::vector<std::string> bad;
  if (!q.fan) return {"no target fan"};
  const Fan& fan = *q.fan;
  const int nc = static_cast<int>(q.components.size());
  if (nc == 0) return {"curve has no components"};

  std::vector<bool> ok(static_cast<std::size_t>(nc), true);
  for (int i = 0; i < nc; ++i) {
    const auto& c = q.components[static_cast<std::size_t>(i)];
    const std::string tag = "component " + std::to_string(i) + ": ";
    if (static_cast<int>(c.sections.size()) != fan.num_rays()) {
      bad.push_back(tag + "has " + std::to_string(c.sections.size()) + " sections, target has " +
                    std::to_string(fan.num_rays()) + " rays");
      ok[static_cast<std::size_t>(i)] = false;
      continue;
    }
    if (!relation_holds(fan, c.degrees())) {
      bad.push_back(tag + "degrees violate sum d_rho u_rho = 0");
      ok[static_cast<std::size_t>(i)] = false;
    }
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (c.sections[static_cast<std::size_t>(rho)].degree() < 0 && !c.sections[static_cast<std::size_t>(rho)].is_zero())
        bad.push_back(tag + "nonzero section of negative degree");
    if (!fan.is_face(c.vanishing())) {
      bad.push_back(tag + "sections vanishing identically on " + to_string(c.vanishing()) +
                    " contain a primitive collection");
      ok[static_cast<std::size_t>(i)] = false;
    }
  }

  auto in_range = [&](const CurvePoint& p) { return p.component >= 0 && p.component < nc; };
  std::vector<CurvePoint> special;
  for (const auto& m : q.markings) {
    if (!in_range(m)) {
      bad.push_back("marking on missing component " + std::to_string(m.component));
      continue;
    }
    special.push_back(m);
  }
  UnionFind uf(nc);
  bool forest = true;
  for (const auto& e : q.nodes) {
    if (!in_range(e.a) || !in_range(e.b)) {
      bad.push_back("node on missing component");
      continue;
    }
    if (e.a.component == e.b.component) {
      bad.push_back("self-node on component " + std::to_string(e.a.component));
      forest = false;
      continue;
    }
    special.push_back(e.a);
    special.push_back(e.b);
    if (!uf.unite(e.a.component, e.b.component)) forest = false;
  }
  std::sort(special.begin(), special.end());
  for (std::size_t i = 1; i < special.size(); ++i)
    if (special[i] == special[i - 1])
      bad.push_back("special point " + to_string(special[i].point) + " on component " +
                    std::to_string(special[i].component) + " used twice");
  if (static_cast<int>(q.nodes.size()) != nc - 1 || !forest) {
    bad.push_back("dual graph is not a tree");
  } else {
    for (int i = 1; i < nc; ++i)
      if (uf.find(i) != uf.find(0)) bad.push_back("dual graph is not connected");
  }

  auto usable = [&](const CurvePoint& p) { return in_range(p) && ok[static_cast<std::size_t>(p.component)]; };
  for (const auto& p : special)
    if (usable(p) && is_basepoint(fan, q.components[static_cast<std::size_t>(p.component)], p.point))
      bad.push_back("special point " + to_string(p.point) + " on component " + std::to_string(p.component) +
                    " is a basepoint");
  if (!bad.empty()) return bad;

  for (const auto& e : q.nodes) {
    auto ea = evaluate(q, e.a.component, e.a.point);
    auto eb = evaluate(q, e.b.component, e.b.point);
    if (!same_point(fan, ea, eb))
      bad.push_back("node branches " + to_string(e.a.point) + " on component " + std::to_string(e.a.component) +
                    " and " + to_string(e.b.point) + " on component " + std::to_string(e.b.component) +
                    " map to different points");
  }
  return bad;
}

void require_valid(const Quasimap& q) {
  auto bad = validate_quasimap(q);
  if (!bad.empty()) throw QuasimapError(std::move(bad));
}

std::vector<BasepointPlace> component_basepoints(const Fan& fan, const Component& c, int index) {
  if (!fan.is_face(c.vanishing())) throw std::invalid_argument("component violates non-degeneracy");
  std::set<Place> places;
  for (const auto& pc : primitive_collections(fan)) {
    Poly g;
    bool any = false, all_at_inf = true;
    for (int rho : pc) {
      const auto& s = c.sections[static_cast<std::size_t>(rho)];
      if (s.is_zero()) continue;
      any = true;
      g = gcd(g, s.affine());
      if (s.order_at(Place::at_infinity()).value() == 0) all_at_inf = false;
    }
    if (!any) continue;
    if (g.degree() > 0)
      for (const auto& [f, m] : factor(g)) places.insert(Place{false, f});
    if (all_at_inf) places.insert(Place::at_infinity());
  }
  std::vector<BasepointPlace> out;
  for (const auto& pl : places) {
    auto ord = orders_at(c, pl);
    out.push_back(BasepointPlace{index, pl, ord, degree_at_point(fan, ord).beta});
  }
  return out;
}

std::vector<BasepointPlace> basepoints(const Quasimap& q) {
  std::vector<BasepointPlace> out;
  for (std::size_t i = 0; i < q.components.size(); ++i) {
    auto b = component_basepoints(*q.fan, q.components[i], static_cast<int>(i));
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Component twist_component(const Fan& fan, const Component& c, const Place& place, const CurveClass& beta) {
  Component out;
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    out.sections.push_back(c.sections[static_cast<std::size_t>(rho)].twisted(place, -beta[rho]));
  return out;
}

Quasimap regular_extension(const Quasimap& q) {
  Quasimap out = q;
  for (const auto& b : basepoints(q)) {
    auto& c = out.components[static_cast<std::size_t>(b.component)];
    c = twist_component(*q.fan, c, b.place, b.beta);
  }
  return out;
}

CurveClass component_degree(const Fan& fan, const Component& c) { return make_curve_class(fan, c.degrees()); }

Degrees degrees(const Quasimap& q) {
  Degrees d{zero_class(*q.fan), {}};
  for (const auto& c : q.components) {
    d.per_component.push_back(component_degree(*q.fan, c));
    d.total += d.per_component.back();
  }
  return d;
}

bool stability(const Quasimap& q, StabilityMode mode, const std::optional<DivisorClass>& ample) {
  const Fan& fan = *q.fan;
  std::optional<DivisorClass> a;
  if (mode == StabilityMode::map) {
    if (!basepoints(q).empty()) throw std::invalid_argument("map stability asked of a quasimap with basepoints");
    if (is_fano(fan))
      a = anticanonical(fan);
    else if (ample)
      a = ample;
    else
      throw std::invalid_argument("map stability on a non-Fano target needs an ample class");
    if (!is_ample(fan, *a)) throw std::invalid_argument("class " + to_string(*a) + " is not ample");
  }
  for (int i = 0; i < static_cast<int>(q.components.size()); ++i) {
    const int sp = q.special_points(i) - 2;
    const CurveClass b = component_degree(fan, q.components[static_cast<std::size_t>(i)]);
    if (mode == StabilityMode::quasimap) {
      if (sp < 0 || (sp == 0 && b.is_zero())) return false;
    } else if (sp + 2 * intersect(fan, b, *a) <= 0) {
      return false;
    }
  }
  return true;
}

Evaluation evaluate(const Fan& fan, const Component& c, const ProjPoint& pt) {
  Evaluation e;
  for (const auto& s : c.sections) e.values.push_back(s.eval(pt));
  for (int k = 0; k < fan.num_cones(); ++k)
    if (cone_valid(fan, e.values, k)) {
      e.cone = k;
      e.coords = chart_coords(fan, e.values, k);
      return e;
    }
  throw std::invalid_argument("evaluation at basepoint " + to_string(pt));
}

Evaluation evaluate(const Quasimap& q, int component, const ProjPoint& pt) {
  return evaluate(*q.fan, q.components.at(static_cast<std::size_t>(component)), pt);
}

bool same_point(const Fan& fan, const Evaluation& a, const Evaluation& b) {
  for (int k = 0; k < fan.num_cones(); ++k)
    if (cone_valid(fan, a.values, k) && cone_valid(fan, b.values, k))
      return chart_coords(fan, a.values, k) == chart_coords(fan, b.values, k);
  return false;
}

std::string to_string(const Fan& fan, const Evaluation& e) {
  std::string out = "cone " + to_string(fan.cone(e.cone)) + " (";
  for (std::size_t i = 0; i < e.coords.size(); ++i) out += (i ? "," : "") + to_string(e.coords[i]);
  return out + ")";
}

bool same_morphism(const Fan& fan, const Component& a, const Component& b) {
  if (a.degrees() != b.degrees() || a.vanishing() != b.vanishing()) return false;
  const RaySet v = a.vanishing();
  int cone = -1;
  for (int k = 0; k < fan.num_cones() && cone < 0; ++k)
    if (v.subset_of(fan.cone(k))) cone = k;
  if (cone < 0) throw std::invalid_argument("component violates non-degeneracy");
  for (const auto& m : fan.dual_basis(cone)) {
    Poly na = Poly::constant(1), da = na, nb = na, db = na;
    for (int rho = 0; rho < fan.num_rays(); ++rho) {
      const std::int64_t e = fan.pairing(m, rho);
      if (e == 0) continue;
      const int k = static_cast<int>(e > 0 ? e : -e);
      const Poly& pa = a.sections[static_cast<std::size_t>(rho)].affine();
      const Poly& pb = b.sections[static_cast<std::size_t>(rho)].affine();
      if (e > 0) {
        na *= pow(pa, k);
        nb *= pow(pb, k);
      } else {
        da *= pow(pa, k);
        db *= pow(pb, k);
      }
    }
    if (na * db != nb * da) return false;
  }
  return true;
}

bool equal_quasimaps(const Quasimap& a, const Quasimap& b) {
  if (a.components.size() != b.components.size() || a.markings != b.markings || a.nodes.size() != b.nodes.size())
    throw std::invalid_argument("quasimaps live on different curves");
  auto node_set = [](const Quasimap& q) {
    std::set<std::pair<CurvePoint, CurvePoint>> s;
    for (const auto& e : q.nodes) s.insert(std::minmax(e.a, e.b));
    return s;
  };
  if (node_set(a) != node_set(b)) throw std::invalid_argument("quasimaps live on different curves");
  if (a.fan != b.fan && a.fan->data().rays != b.fan->data().rays)
    throw std::invalid_argument("quasimaps have different targets");
  const Fan& fan = *a.fan;
  auto ra = regular_extension(a), rb = regular_extension(b);
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (!same_morphism(fan, ra.components[i], rb.components[i])) return false;
  auto ba = basepoints(a), bb = basepoints(b);
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i)
    if (ba[i].component != bb[i].component || ba[i].place != bb[i].place || ba[i].beta != bb[i].beta) return false;
  return true;
}

Component act_by_torus(const Fan& fan, const Component& c, const RatVec& g) {
  if (static_cast<int>(g.size()) != fan.picard_rank()) throw std::invalid_argument("torus element has wrong size");
  Component out;
  for (int rho = 0; rho < fan.num_rays(); ++rho) {
    const auto d = divisor_class(fan, rho).coords;
    Rational lambda(1);
    for (std::size_t k = 0; k < g.size(); ++k) lambda *= rpow(g[k], d[k]);
    out.sections.push_back(c.sections[static_cast<std::size_t>(rho)].scaled(lambda));
  }
  return out;
}

}  // namespace toriq
