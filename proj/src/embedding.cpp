#include "toriq/embedding.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "toriq/catalog.hpp"
#include "toriq/linalg.hpp"

namespace toriq {

namespace {

using Sizes = std::size_t;

std::int64_t exponent(const EmbeddingSpec& e, int tau, int rho) {
  return e.monomials[static_cast<Sizes>(tau)].exponents[static_cast<Sizes>(rho)];
}

RaySet support(const IntVec& a) {
  std::vector<int> s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.push_back(static_cast<int>(i));
  return RaySet(s);
}

bool disjoint(const RaySet& a, const RaySet& b) {
  return std::none_of(a.begin(), a.end(), [&](int i) { return b.contains(i); });
}

// Coefficients a_rho of the anchor representative sum a_rho D_rho.
IntVec anchor_representative(const Fan& fan, const DivisorClass& d) {
  DivisorClass d0 = to_anchor(fan, d, 0);
  IntVec a(static_cast<Sizes>(fan.num_rays()), 0);
  auto rays = anchor_rays(fan, 0);
  for (std::size_t k = 0; k < rays.size(); ++k) a[static_cast<Sizes>(rays[k])] = d0.coords[k];
  return a;
}

// Lattice points of P_D = {m : <m,u_rho> >= -a_rho}, as exponent vectors.
std::vector<IntVec> section_monomials(const Fan& fan, const DivisorClass& d) {
  const IntVec a = anchor_representative(fan, d);
  RatMatrix A;
  RatVec b;
  for (int rho = 0; rho < fan.num_rays(); ++rho) {
    RatVec row;
    for (auto v : fan.ray(rho)) row.push_back(make_rational(v));
    A.push_back(row);
    b.push_back(make_rational(-a[static_cast<Sizes>(rho)]));
  }
  std::vector<IntVec> out;
  for (const auto& m : polytope_lattice_points(A, b)) {
    IntVec ex;
    for (int rho = 0; rho < fan.num_rays(); ++rho) ex.push_back(fan.pairing(m, rho) + a[static_cast<Sizes>(rho)]);
    out.push_back(ex);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Rational function num/den in the affine coordinate.
struct RatFun {
  Poly num, den;
};

Component normalize(const Fan& fan, const std::vector<RatFun>& t) {
  std::set<Poly> factors;
  for (const auto& f : t) {
    if (f.num.is_zero()) continue;
    for (const auto& [p, m] : factor(f.num)) factors.insert(p);
    for (const auto& [p, m] : factor(f.den)) factors.insert(p);
  }
  const int r = fan.num_rays();
  std::vector<Rational> scale(static_cast<Sizes>(r));
  std::vector<Poly> poly(static_cast<Sizes>(r), Poly::constant(Rational(1)));
  for (int rho = 0; rho < r; ++rho) {
    const auto& f = t[static_cast<Sizes>(rho)];
    if (f.num.is_zero()) continue;
    Rational c = f.num.leading() / f.den.leading();
    c.canonicalize();
    scale[static_cast<Sizes>(rho)] = c;
  }
  for (const auto& p : factors) {
    OrderVector ord;
    for (const auto& f : t)
      ord.orders.push_back(f.num.is_zero() ? Order::infinity() : Order(multiplicity(f.num, p) - multiplicity(f.den, p)));
    const CurveClass b = degree_at_point(fan, ord).beta;
    for (int rho = 0; rho < r; ++rho) {
      if (ord[rho].is_inf()) continue;
      const std::int64_t e = ord[rho].value() - b[rho];
      if (e < 0) throw std::logic_error("normalization left a pole");
      poly[static_cast<Sizes>(rho)] *= pow(p, static_cast<int>(e));
    }
  }
  OrderVector at_inf;
  for (int rho = 0; rho < r; ++rho)
    at_inf.orders.push_back(t[static_cast<Sizes>(rho)].num.is_zero() ? Order::infinity()
                                                                     : Order(-poly[static_cast<Sizes>(rho)].degree()));
  const CurveClass binf = degree_at_point(fan, at_inf).beta;
  Component out;
  for (int rho = 0; rho < r; ++rho) {
    const int d = static_cast<int>(-binf[rho]);
    if (t[static_cast<Sizes>(rho)].num.is_zero())
      out.sections.push_back(BinaryForm::zero(d));
    else
      out.sections.push_back(BinaryForm(d, poly[static_cast<Sizes>(rho)] * scale[static_cast<Sizes>(rho)]));
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_embedding(const EmbeddingSpec& e) {
  if (!e.source || !e.target) return {"missing source or target fan"};
  const Fan& X = *e.source;
  const Fan& Y = *e.target;
  std::vector<std::string> bad;
  if (static_cast<int>(e.monomials.size()) != Y.num_rays())
    return {"need one monomial per target ray (" + std::to_string(Y.num_rays()) + "), got " +
            std::to_string(e.monomials.size())};
  for (int tau = 0; tau < Y.num_rays(); ++tau) {
    const auto& mono = e.monomials[static_cast<Sizes>(tau)];
    if (static_cast<int>(mono.exponents.size()) != X.num_rays()) {
      bad.push_back("monomial " + std::to_string(tau) + " needs " + std::to_string(X.num_rays()) + " exponents");
      continue;
    }
    if (mono.coeff == 0) bad.push_back("monomial " + std::to_string(tau) + " has zero coefficient");
    for (auto v : mono.exponents)
      if (v < 0) bad.push_back("monomial " + std::to_string(tau) + " has a negative exponent");
  }
  if (!bad.empty()) return bad;

  // <m_X, u_rho> = sum_tau a^tau_rho <m_Y, u_tau> must be solvable for each m_Y
  const RaySet& s0 = X.cone(0);
  for (int i = 0; i < Y.dim(); ++i) {
    IntVec v(static_cast<Sizes>(X.num_rays()), 0);
    for (int tau = 0; tau < Y.num_rays(); ++tau)
      for (int rho = 0; rho < X.num_rays(); ++rho)
        v[static_cast<Sizes>(rho)] += exponent(e, tau, rho) * Y.ray(tau)[static_cast<Sizes>(i)];
    IntVec m(static_cast<Sizes>(X.dim()), 0);
    const auto& basis = X.dual_basis(0);
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (int k = 0; k < X.dim(); ++k)
        m[static_cast<Sizes>(k)] += v[static_cast<Sizes>(s0.indices()[j])] * basis[j][static_cast<Sizes>(k)];
    for (int rho = 0; rho < X.num_rays(); ++rho)
      if (X.pairing(m, rho) != v[static_cast<Sizes>(rho)]) {
        bad.push_back("exponents do not induce a map of character lattices (target coordinate " + std::to_string(i) +
                      ")");
        break;
      }
  }
  for (int k = 0; k < X.num_cones(); ++k) {
    bool found = false;
    for (int l = 0; l < Y.num_cones() && !found; ++l) {
      found = true;
      for (int tau = 0; tau < Y.num_rays() && found; ++tau)
        if (!Y.cone(l).contains(tau) && !disjoint(support(e.monomials[static_cast<Sizes>(tau)].exponents), X.cone(k)))
          found = false;
    }
    if (!found) bad.push_back("monomials vanish simultaneously at the fixed point of cone " + to_string(X.cone(k)));
  }
  return bad;
}

void require_valid(const EmbeddingSpec& e) {
  auto bad = validate_embedding(e);
  if (bad.empty()) return;
  std::string msg = "invalid embedding:";
  for (const auto& b : bad) msg += " " + b + ";";
  throw std::invalid_argument(msg);
}

DivisorClass pullback_pic(const EmbeddingSpec& e, const DivisorClass& d) {
  const IntVec c = anchor_representative(*e.target, d);
  IntVec a(static_cast<Sizes>(e.source->num_rays()), 0);
  for (int tau = 0; tau < e.target->num_rays(); ++tau)
    for (int rho = 0; rho < e.source->num_rays(); ++rho)
      a[static_cast<Sizes>(rho)] += c[static_cast<Sizes>(tau)] * exponent(e, tau, rho);
  return divisor_from_rays(*e.source, a);
}

CurveClass pushforward_curves(const EmbeddingSpec& e, const CurveClass& beta) {
  IntVec p(static_cast<Sizes>(e.target->num_rays()), 0);
  for (int tau = 0; tau < e.target->num_rays(); ++tau)
    for (int rho = 0; rho < e.source->num_rays(); ++rho) p[static_cast<Sizes>(tau)] += exponent(e, tau, rho) * beta[rho];
  return make_curve_class(*e.target, p);
}

bool epic_check(const EmbeddingSpec& e) {
  const int p = e.source->picard_rank();
  IntMatrix m(static_cast<Sizes>(p));
  for (int tau = 0; tau < e.target->num_rays(); ++tau) {
    const auto col = divisor_from_rays(*e.source, e.monomials[static_cast<Sizes>(tau)].exponents).coords;
    for (int i = 0; i < p; ++i) m[static_cast<Sizes>(i)].push_back(col[static_cast<Sizes>(i)]);
  }
  auto inv = smith_invariants(m);
  return static_cast<int>(inv.size()) == p && std::all_of(inv.begin(), inv.end(), [](const Integer& z) { return abs(z) == 1; });
}

EmbeddingSpec embedding_from_divisors(const FanPtr& fan, const std::vector<DivisorClass>& divisors) {
  if (divisors.empty()) throw std::invalid_argument("no divisors given");
  EmbeddingSpec e;
  e.source = fan;
  std::vector<int> dims;
  for (const auto& d : divisors) {
    if (!is_nef(*fan, d)) throw std::invalid_argument("divisor class " + to_string(d) + " is not nef");
    auto monos = section_monomials(*fan, d);
    if (monos.size() < 2) throw std::invalid_argument("divisor class " + to_string(d) + " has fewer than two sections");
    dims.push_back(static_cast<int>(monos.size()) - 1);
    for (auto& a : monos) e.monomials.push_back(Monomial{Rational(1), a});
  }
  e.target = catalog::product_of_projective_spaces(dims);
  require_valid(e);
  return e;
}

bool closed_embedding_criterion(const Fan& fan, const std::vector<DivisorClass>& divisors) {
  std::vector<IntVec> reps;
  for (const auto& d : divisors) reps.push_back(anchor_representative(fan, d));
  auto in_polytope = [&](const IntVec& m, const IntVec& a) {
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (fan.pairing(m, rho) < -a[static_cast<Sizes>(rho)]) return false;
    return true;
  };
  for (int k = 0; k < fan.num_cones(); ++k) {
    const auto& basis = fan.dual_basis(k);
    const auto& rays = fan.cone(k).indices();
    for (const auto& mj : basis) {
      bool hit = false;
      for (const auto& a : reps) {
        IntVec vertex(static_cast<Sizes>(fan.dim()), 0);
        for (std::size_t j = 0; j < rays.size(); ++j)
          for (int c = 0; c < fan.dim(); ++c)
            vertex[static_cast<Sizes>(c)] -= a[static_cast<Sizes>(rays[j])] * basis[j][static_cast<Sizes>(c)];
        IntVec shifted = vertex;
        for (int c = 0; c < fan.dim(); ++c) shifted[static_cast<Sizes>(c)] += mj[static_cast<Sizes>(c)];
        if (in_polytope(vertex, a) && in_polytope(shifted, a)) hit = true;
      }
      if (!hit) return false;
    }
  }
  return true;
}

EmbeddingSpec build_epic_embedding(const FanPtr& fan) {
  auto ample = ample_class(*fan);
  if (!ample) throw std::invalid_argument("fan is not projective: no ample class");
  std::vector<DivisorClass> gens;
  for (const auto& d : nef_hilbert_basis(*fan))
    if (section_monomials(*fan, d).size() >= 2) gens.push_back(d);
  if (!closed_embedding_criterion(*fan, gens)) gens.push_back(*ample);
  std::stable_sort(gens.begin(), gens.end(), [&](const DivisorClass& a, const DivisorClass& b) {
    return section_monomials(*fan, a).size() > section_monomials(*fan, b).size();
  });
  auto e = embedding_from_divisors(fan, gens);
  if (!epic_check(e)) throw std::logic_error("built embedding is not epic");
  return e;
}

Component apply_ibar(const EmbeddingSpec& e, const Component& c) {
  Component out;
  for (int tau = 0; tau < e.target->num_rays(); ++tau) {
    const auto& mono = e.monomials[static_cast<Sizes>(tau)];
    BinaryForm s = BinaryForm::constant(mono.coeff);
    for (int rho = 0; rho < e.source->num_rays(); ++rho)
      if (mono.exponents[static_cast<Sizes>(rho)] > 0)
        s = s * pow(c.sections[static_cast<Sizes>(rho)], static_cast<int>(mono.exponents[static_cast<Sizes>(rho)]));
    out.sections.push_back(s);
  }
  return out;
}

Quasimap apply_ibar(const EmbeddingSpec& e, const Quasimap& q) {
  Quasimap out = q;
  out.fan = e.target;
  for (auto& c : out.components) c = apply_ibar(e, c);
  return out;
}

std::optional<Component> factor_through(const EmbeddingSpec& e, const Component& r) {
  const Fan& X = *e.source;
  const Fan& Y = *e.target;
  std::vector<DivisorClass> target_class;
  for (int tau = 0; tau < Y.num_rays(); ++tau) target_class.push_back(divisor_class(Y, tau));
  for (int k = 0; k < X.num_cones(); ++k) {
    const RaySet& sigma = X.cone(k);
    std::vector<RatFun> t(static_cast<Sizes>(X.num_rays()), RatFun{Poly::constant(Rational(1)), Poly::constant(Rational(1))});
    bool ok = true;
    const auto& basis = X.dual_basis(k);
    for (std::size_t j = 0; j < basis.size() && ok; ++j) {
      IntVec w;
      for (int rho = 0; rho < X.num_rays(); ++rho) w.push_back(X.pairing(basis[j], rho));
      bool found = false;
      for (int tau = 0; tau < Y.num_rays() && !found; ++tau)
        for (int tp = 0; tp < Y.num_rays() && !found; ++tp) {
          const auto& a = e.monomials[static_cast<Sizes>(tau)];
          const auto& b = e.monomials[static_cast<Sizes>(tp)];
          if (target_class[static_cast<Sizes>(tau)] != target_class[static_cast<Sizes>(tp)]) continue;
          if (!disjoint(support(b.exponents), sigma)) continue;
          if (r.sections[static_cast<Sizes>(tp)].is_zero()) continue;
          bool diff = true;
          for (int rho = 0; rho < X.num_rays() && diff; ++rho)
            diff = a.exponents[static_cast<Sizes>(rho)] - b.exponents[static_cast<Sizes>(rho)] == w[static_cast<Sizes>(rho)];
          if (!diff) continue;
          Rational c = b.coeff / a.coeff;
          t[static_cast<Sizes>(sigma.indices()[j])] =
              RatFun{r.sections[static_cast<Sizes>(tau)].affine() * c, r.sections[static_cast<Sizes>(tp)].affine()};
          found = true;
        }
      ok = found;
    }
    if (!ok) continue;
    Component f = normalize(X, t);
    if (same_morphism(Y, apply_ibar(e, f), r)) return f;
  }
  return std::nullopt;
}

std::vector<Quasimap> fibre_enumeration(const EmbeddingSpec& e, const Quasimap& q, const CurveClass& beta,
                                        const FibreOptions& opt) {
  const Fan& X = *e.source;
  if (pushforward_curves(e, beta) != degrees(q).total)
    throw std::invalid_argument("target quasimap has degree " + to_string(degrees(q).total) + ", not iota_*" +
                                to_string(beta));
  if (!is_effective(X, beta)) return {};
  const Quasimap r = regular_extension(q);
  std::vector<Component> fs;
  CurveClass rest = beta;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    std::optional<Component> f;
    if (opt.factoring) {
      if (opt.factoring->size() != r.components.size())
        throw std::invalid_argument("factoring data needs one component per curve component");
      const Component& g = (*opt.factoring)[i];
      if (static_cast<int>(g.sections.size()) == X.num_rays() && X.is_face(g.vanishing()) &&
          component_basepoints(X, g).empty() && same_morphism(*e.target, apply_ibar(e, g), r.components[i]))
        f = g;
    } else {
      f = factor_through(e, r.components[i]);
    }
    if (!f) return {};
    rest -= component_degree(X, *f);
    fs.push_back(*f);
  }

  const auto bps = basepoints(q);
  const auto below = effective_classes_below(X, beta);
  std::vector<std::vector<CurveClass>> choices;
  for (const auto& b : bps) {
    std::vector<CurveClass> c;
    const OrderVector ord = orders_at(fs[static_cast<Sizes>(b.component)], b.place);
    for (const auto& g : below) {
      if (g.is_zero() || pushforward_curves(e, g) != b.beta) continue;
      bool cond = true;
      for (int rho = 0; rho < X.num_rays(); ++rho)
        if (!ord[rho].is_inf() && ord[rho].value() + g[rho] < 0) cond = false;
      if (cond) c.push_back(g);
    }
    if (c.empty()) return {};
    choices.push_back(std::move(c));
  }

  std::vector<Quasimap> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    CurveClass sum = zero_class(X);
    for (std::size_t k = 0; k < choices.size(); ++k)
      sum += static_cast<std::int64_t>(bps[k].place.degree()) * choices[k][idx[k]];
    if (sum == rest) {
      Quasimap cand = q;
      cand.fan = e.source;
      cand.components = fs;
      for (std::size_t k = 0; k < choices.size(); ++k) {
        auto& c = cand.components[static_cast<Sizes>(bps[k].component)];
        c = twist_component(X, c, bps[k].place, zero_class(X) - choices[k][idx[k]]);
      }
      if (validate_quasimap(cand).empty() && equal_quasimaps(apply_ibar(e, cand), q)) out.push_back(std::move(cand));
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

namespace catalog {

EmbeddingSpec segre_embedding() {
  EmbeddingSpec e;
  e.source = p1xp1();
  e.target = projective_space(3);
  for (IntVec a : {IntVec{1, 0, 1, 0}, IntVec{1, 0, 0, 1}, IntVec{0, 1, 1, 0}, IntVec{0, 1, 0, 1}})
    e.monomials.push_back(Monomial{Rational(1), a});
  return e;
}

EmbeddingSpec blowup_embedding() {
  EmbeddingSpec e;
  e.source = bl0p2();
  e.target = product_of_projective_spaces({2, 1});
  for (IntVec a : {IntVec{1, 0, 0, 0}, IntVec{0, 1, 0, 1}, IntVec{0, 0, 1, 1}, IntVec{0, 1, 0, 0}, IntVec{0, 0, 1, 0}})
    e.monomials.push_back(Monomial{Rational(1), a});
  return e;
}

}  // namespace catalog

}  // namespace toriq
