#include "toriq/contraction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toriq {

namespace {

// Drops the flagged components; nodes touching them go too.  Markings must
// all survive.
Quasimap remove_components(const Quasimap& q, const std::vector<bool>& drop) {
  std::vector<int> index(q.components.size(), -1);
  Quasimap out;
  out.fan = q.fan;
  for (std::size_t i = 0; i < q.components.size(); ++i)
    if (!drop[i]) {
      index[i] = static_cast<int>(out.components.size());
      out.components.push_back(q.components[i]);
    }
  auto move = [&](CurvePoint p) {
    p.component = index[static_cast<std::size_t>(p.component)];
    return p;
  };
  for (const auto& e : q.nodes)
    if (!drop[static_cast<std::size_t>(e.a.component)] && !drop[static_cast<std::size_t>(e.b.component)])
      out.nodes.push_back(Node{move(e.a), move(e.b)});
  for (const auto& m : q.markings) {
    if (drop[static_cast<std::size_t>(m.component)]) throw std::logic_error("removing a marked component");
    out.markings.push_back(move(m));
  }
  return out;
}

// Multiplies the sections by a local equation of the place to the power
// beta.D_rho.
Component absorb(const Fan& fan, const Component& c, const Place& place, const CurveClass& beta) {
  return twist_component(fan, c, place, zero_class(fan) - beta);
}

std::vector<bool> flags(const Quasimap& q, const std::vector<int>& members) {
  std::vector<bool> f(q.components.size(), false);
  for (int i : members) f[static_cast<std::size_t>(i)] = true;
  return f;
}

}  // namespace

std::vector<int> core_components(const Quasimap& f) {
  const std::size_t nc = f.components.size();
  std::vector<bool> keep(nc, false), alive(nc, true);
  if (f.markings.empty()) {
    if (nc) keep[0] = true;
  } else {
    for (const auto& m : f.markings) keep[static_cast<std::size_t>(m.component)] = true;
  }
  std::vector<int> deg(nc, 0);
  for (const auto& e : f.nodes) {
    ++deg[static_cast<std::size_t>(e.a.component)];
    ++deg[static_cast<std::size_t>(e.b.component)];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < nc; ++i) {
      if (!alive[i] || keep[i] || deg[i] > 1) continue;
      alive[i] = false;
      changed = true;
      for (int j : f.neighbours(static_cast<int>(i)))
        if (alive[static_cast<std::size_t>(j)]) --deg[static_cast<std::size_t>(j)];
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < nc; ++i)
    if (alive[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<RationalTail> rational_tails(const Quasimap& f) {
  const auto core = flags(f, core_components(f));
  std::vector<RationalTail> out;
  for (const auto& e : f.nodes) {
    const bool ca = core[static_cast<std::size_t>(e.a.component)], cb = core[static_cast<std::size_t>(e.b.component)];
    if (ca == cb) continue;
    RationalTail t{{}, ca ? e.a : e.b, ca ? e.b : e.a, zero_class(*f.fan)};
    std::vector<bool> seen = core;
    std::vector<int> stack{t.foot.component};
    seen[static_cast<std::size_t>(t.foot.component)] = true;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      t.components.push_back(c);
      t.beta += component_degree(*f.fan, f.components[static_cast<std::size_t>(c)]);
      for (int j : f.neighbours(c))
        if (!seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          stack.push_back(j);
        }
    }
    std::sort(t.components.begin(), t.components.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const RationalTail& a, const RationalTail& b) { return a.attach < b.attach; });
  return out;
}

bool is_map(const Quasimap& f) { return validate_quasimap(f).empty() && basepoints(f).empty(); }

void require_map(const Quasimap& f) {
  require_valid(f);
  if (!basepoints(f).empty()) throw std::invalid_argument("not a map: the quasimap has basepoints");
}

bool ContractionReport::ok() const {
  return std::all_of(tails.begin(), tails.end(), [](const TailCheck& t) { return t.ok(); });
}

ContractionReport contraction_condition(const Quasimap& f) {
  require_map(f);
  ContractionReport r;
  for (auto& t : rational_tails(f)) {
    TailCheck c{std::move(t), {}};
    const auto ord = orders_at(f.components[static_cast<std::size_t>(c.tail.attach.component)], Place::of(c.tail.attach.point));
    for (int rho = 0; rho < f.fan->num_rays(); ++rho)
      if (!ord[rho].is_inf() && ord[rho].value() + c.tail.beta[rho] < 0) c.failing_rays.push_back(rho);
    r.tails.push_back(std::move(c));
  }
  return r;
}

Quasimap contract(const Quasimap& f) {
  const auto report = contraction_condition(f);
  if (!report.ok()) throw std::domain_error("map is outside the domain of the contraction");
  Quasimap g = f;
  std::vector<bool> drop(f.components.size(), false);
  for (const auto& t : report.tails) {
    auto& c = g.components[static_cast<std::size_t>(t.tail.attach.component)];
    c = absorb(*f.fan, c, Place::of(t.tail.attach.point), t.tail.beta);
    for (int i : t.tail.components) drop[static_cast<std::size_t>(i)] = true;
  }
  return remove_components(g, drop);
}

Quasimap graft(const Quasimap& q, const CurvePoint& at, const Component& tail, const ProjPoint& attach) {
  const Fan& fan = *q.fan;
  if (at.component < 0 || at.component >= static_cast<int>(q.components.size()))
    throw std::invalid_argument("graft point on a missing component");
  const Place place = Place::of(at.point);
  const auto& c = q.components[static_cast<std::size_t>(at.component)];
  std::optional<CurveClass> beta;
  for (const auto& b : component_basepoints(fan, c, at.component))
    if (b.place == place) beta = b.beta;
  if (!beta) throw std::invalid_argument("graft point " + to_string(at.point) + " is not a basepoint");
  if (static_cast<int>(tail.sections.size()) != fan.num_rays())
    throw std::invalid_argument("tail has the wrong number of sections");
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    if (tail.sections[static_cast<std::size_t>(rho)].degree() != (*beta)[rho])
      throw std::invalid_argument("tail section " + std::to_string(rho) + " has degree " +
                                  std::to_string(tail.sections[static_cast<std::size_t>(rho)].degree()) + ", expected " +
                                  std::to_string((*beta)[rho]));
  const Component ext = twist_component(fan, c, place, *beta);
  if (!fan.is_face(tail.vanishing())) throw std::invalid_argument("tail sections violate non-degeneracy");
  if (is_basepoint(fan, tail, attach)) throw std::invalid_argument("tail attaching point is a basepoint");
  if (!same_point(fan, evaluate(fan, ext, at.point), evaluate(fan, tail, attach)))
    throw std::invalid_argument("tail does not match the extended value at " + to_string(at.point));
  Quasimap out = q;
  out.components[static_cast<std::size_t>(at.component)] = ext;
  out.components.push_back(tail);
  out.nodes.push_back(Node{at, CurvePoint{static_cast<int>(out.components.size()) - 1, attach}});
  require_valid(out);
  return out;
}

Component default_tail(const Quasimap& q, const CurvePoint& at, int& next_zero) {
  const Fan& fan = *q.fan;
  const Place place = Place::of(at.point);
  const auto& c = q.components.at(static_cast<std::size_t>(at.component));
  std::optional<CurveClass> beta;
  for (const auto& b : component_basepoints(fan, c, at.component))
    if (b.place == place) beta = b.beta;
  if (!beta) throw std::invalid_argument("graft point " + to_string(at.point) + " is not a basepoint");
  const Component ext = twist_component(fan, c, place, *beta);
  Component t;
  for (int rho = 0; rho < fan.num_rays(); ++rho) {
    const int d = static_cast<int>((*beta)[rho]);
    const Rational v = ext.sections[static_cast<std::size_t>(rho)].eval(at.point);
    if (d < 0) {
      t.sections.push_back(BinaryForm::zero(d));
      continue;
    }
    Poly p = v == 0 ? Poly::monomial(Rational(1), d > 0 ? 1 : 0) : Poly::constant(v);
    if (v == 0 && d == 0) p = Poly();
    for (int k = v == 0 ? 1 : 0; k < d; ++k) {
      Rational a(next_zero++);
      p *= Poly(RatVec{Rational(1), Rational(-1) / a});
    }
    t.sections.push_back(BinaryForm(d, p));
  }
  return t;
}

Quasimap prune(const Quasimap& q, int component) {
  if (component < 0 || component >= static_cast<int>(q.components.size()))
    throw std::invalid_argument("prune of a missing component");
  for (const auto& m : q.markings)
    if (m.component == component) throw std::invalid_argument("cannot prune a marked component");
  const Node* link = nullptr;
  int count = 0;
  for (const auto& e : q.nodes)
    if (e.a.component == component || e.b.component == component) {
      link = &e;
      ++count;
    }
  if (count != 1) throw std::invalid_argument("component " + std::to_string(component) + " is not a leaf");
  const CurvePoint there = link->a.component == component ? link->b : link->a;
  Quasimap g = q;
  auto& c = g.components[static_cast<std::size_t>(there.component)];
  c = absorb(*q.fan, c, Place::of(there.point), component_degree(*q.fan, q.components[static_cast<std::size_t>(component)]));
  std::vector<bool> drop(q.components.size(), false);
  drop[static_cast<std::size_t>(component)] = true;
  return remove_components(g, drop);
}

Quasimap stabilize_map(const Quasimap& f) {
  Quasimap g = f;
  for (bool changed = true; changed;) {
    changed = false;
    const auto core = flags(g, core_components(g));
    for (int k = 0; k < static_cast<int>(g.components.size()) && !changed; ++k) {
      if (core[static_cast<std::size_t>(k)] || g.special_points(k) > 2) continue;
      if (!component_degree(*g.fan, g.components[static_cast<std::size_t>(k)]).is_zero()) continue;
      std::vector<CurvePoint> ends;
      for (const auto& e : g.nodes) {
        if (e.a.component == k) ends.push_back(e.b);
        if (e.b.component == k) ends.push_back(e.a);
      }
      if (ends.size() == 2) g.nodes.push_back(Node{ends[0], ends[1]});
      std::vector<bool> drop(g.components.size(), false);
      drop[static_cast<std::size_t>(k)] = true;
      g = remove_components(g, drop);
      changed = true;
    }
  }
  return g;
}

Quasimap surjectivity_witness(const Quasimap& q) {
  require_valid(q);
  const Fan& fan = *q.fan;
  if (!stability(q, StabilityMode::quasimap)) throw std::invalid_argument("quasimap is not stable");
  if (!is_fano(fan)) {
    const auto bound = intersect(fan, degrees(q).total, degree_class(fan));
    if (!relaxed_surjectivity_condition(fan, bound))
      throw std::invalid_argument("target is neither Fano nor satisfies the relaxed surjectivity condition");
  }
  for (const auto& b : basepoints(q))
    if (!b.place.is_rational())
      throw std::invalid_argument("basepoint " + to_string(b.place) + " is not rational; grafting needs a named point");

  Quasimap f = q;
  std::map<int, CurveClass> grafted;  // tail component -> class it was grafted with
  const auto budget = 16 * (length(degrees(q).total) + 1) * static_cast<std::int64_t>(q.components.size() + 1);
  for (std::int64_t step = 0;; ++step) {
    const auto bps = basepoints(f);
    if (bps.empty()) break;
    if (step > budget) throw std::logic_error("witness search did not terminate");
    const auto& b = bps.front();
    auto it = grafted.find(b.component);
    if (it != grafted.end() && it->second == b.beta)
      throw std::logic_error("length descent violated: basepoint of class " + to_string(b.beta) +
                             " on a tail grafted with the same class");
    const CurvePoint at{b.component, b.place.point()};
    int next_zero = 1;
    const Component tail = default_tail(f, at, next_zero);
    f = graft(f, at, tail, ProjPoint::affine(Rational(0)));
    grafted[static_cast<int>(f.components.size()) - 1] = b.beta;
  }
  f = stabilize_map(f);
  if (!contraction_condition(f).ok() || !equal_quasimaps(contract(f), q))
    throw std::logic_error("witness does not contract to the input");
  return f;
}

}  // namespace toriq
