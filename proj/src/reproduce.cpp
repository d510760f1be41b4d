#include "toriq/reproduce.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "toriq/catalog.hpp"
#include "toriq/contraction.hpp"
#include "toriq/embedding.hpp"
#include "toriq/examples.hpp"

namespace toriq {

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

void add(std::vector<ReproCheck>& out, std::string name, const std::string& expected, const std::string& computed) {
  out.push_back(ReproCheck{std::move(name), expected, computed, expected == computed});
}

std::string cones(const Fan& fan, const std::vector<int>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + to_string(fan.cone(idx[i]));
  return s + "]";
}

// Monomial exponent sets grouped by the target factor (rays of equal class).
std::string factor_sets(const EmbeddingSpec& e) {
  std::map<DivisorClass, std::set<IntVec>> groups;
  for (int t = 0; t < e.target->num_rays(); ++t)
    groups[divisor_class(*e.target, t)].insert(e.monomials[static_cast<std::size_t>(t)].exponents);
  std::multiset<std::string> sets;
  for (const auto& [cls, monos] : groups) {
    std::string s = "{";
    bool first = true;
    for (const auto& m : monos) {
      s += (first ? "" : " ") + to_string(CurveClass{m});
      first = false;
    }
    sets.insert(s + "}");
  }
  std::string out;
  for (const auto& s : sets) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::vector<ReproCheck> table1() {
  auto fan = catalog::bl0p2();
  std::vector<ReproCheck> out;
  int row = 0;
  for (const auto& r : examples::table1()) {
    ++row;
    const auto d = degree_at_point(*fan, parse_orders(r.orders));
    add(out, "row " + std::to_string(row) + " ord=(" + r.orders + ")",
        "beta=" + to_string(CurveClass{r.beta}) + " cones=" + cones(*fan, r.witnesses),
        "beta=" + to_string(d.beta) + " cones=" + cones(*fan, d.witnesses));
  }
  return out;
}

std::vector<ReproCheck> segre() {
  const auto e = catalog::segre_embedding();
  const auto q1 = examples::segre_q1(), q2 = examples::segre_q2();
  std::vector<ReproCheck> out;
  add(out, "q1 and q2 differ", "true", yes(!equal_quasimaps(q1, q2)));
  const auto i1 = apply_ibar(e, q1), i2 = apply_ibar(e, q2);
  add(out, "ibar q1 = ibar q2", "true", yes(equal_quasimaps(i1, i2)));
  add(out, "degree of the image", "(4,4,4,4)", to_string(degrees(i1).total));
  const auto fibre = fibre_enumeration(e, i1, make_curve_class(*q1.fan, {2, 2, 2, 2}));
  add(out, "fibre size over ibar q1, class (2,2)", "2", std::to_string(fibre.size()));
  bool has1 = false, has2 = false;
  for (const auto& f : fibre) {
    has1 = has1 || equal_quasimaps(f, q1);
    has2 = has2 || equal_quasimaps(f, q2);
  }
  add(out, "fibre contains q1", "true", yes(has1));
  add(out, "fibre contains q2", "true", yes(has2));
  add(out, "segre embedding is epic", "false", yes(epic_check(e)));
  return out;
}

std::vector<ReproCheck> blowup_embeddings() {
  auto fan = catalog::bl0p2();
  std::vector<ReproCheck> out;
  const auto built = build_epic_embedding(fan);
  add(out, "built target", "P2xP1", built.target->name());
  add(out, "built monomials per factor", "{(0,0,1,0) (0,1,0,0)} {(0,0,1,1) (0,1,0,1) (1,0,0,0)}", factor_sets(built));
  add(out, "built embedding is valid", "true", yes(validate_embedding(built).empty()));
  add(out, "built embedding is epic", "true", yes(epic_check(built)));
  const auto bundled = catalog::blowup_embedding();
  add(out, "bundled embedding is valid", "true", yes(validate_embedding(bundled).empty()));
  add(out, "bundled embedding is epic", "true", yes(epic_check(bundled)));
  // [D2] = S and [D0] = L
  std::set<std::string> labels;
  for (const auto& d : nef_hilbert_basis(*fan))
    labels.insert(d == divisor_class(*fan, 2) ? "S" : d == divisor_class(*fan, 0) ? "L" : to_string(d));
  std::string hb;
  for (const auto& l : labels) hb += (hb.empty() ? "" : " ") + l;
  add(out, "nef Hilbert basis", "L S", hb);
  add(out, "segre embedding is epic", "false", yes(epic_check(catalog::segre_embedding())));
  return out;
}

std::vector<ReproCheck> family_t() {
  std::vector<ReproCheck> out;
  for (int t = 0; t <= 5; ++t)
    add(out, "condition at t=" + std::to_string(t), yes(t == 0),
        yes(contraction_condition(examples::family_map(make_rational(t))).ok()));
  const auto c = contract(examples::family_map(Rational(0)));
  const auto expect = examples::family_contracted();
  add(out, "contract(f0) = [x0^2 : 0 : 2x1^2 : 1]", "true", yes(equal_quasimaps(c, expect)));
  add(out, "degree of contract(f0)", "(2,2,2,0)", to_string(degrees(c).total));
  const auto b = basepoints(c);
  add(out, "basepoints of contract(f0)", "[1:0] beta=(0,2,2,-2)",
      b.size() == 1 && b[0].place.is_rational() ? to_string(b[0].place.point()) + " beta=" + to_string(b[0].beta)
                                                : std::to_string(b.size()) + " basepoints");
  add(out, "contract(f0) is quasimap-stable", "true", yes(stability(c, StabilityMode::quasimap)));
  return out;
}

std::vector<ReproCheck> extension_degree() {
  const auto q = examples::p2_line({ProjPoint::affine(Rational(0)), ProjPoint::affine(Rational(1))});
  std::vector<ReproCheck> out;
  add(out, "degree of q", "(1,1,1)", to_string(degrees(q).total));
  const auto b = basepoints(q);
  add(out, "basepoints of q", "[0:1] beta=(1,1,1)",
      b.size() == 1 ? to_string(b[0].place) + " beta=" + to_string(b[0].beta) : std::to_string(b.size()) + " basepoints");
  const auto r = regular_extension(q);
  add(out, "degree of the regular extension", "(0,0,0)", to_string(degrees(r).total));
  add(out, "q is quasimap-stable", "true", yes(stability(q, StabilityMode::quasimap)));
  add(out, "regular extension is map-stable", "false", yes(stability(r, StabilityMode::map)));
  return out;
}

std::vector<ReproCheck> witness_demo() {
  std::vector<ReproCheck> out;
  const auto q = examples::p2_line({ProjPoint::affine(Rational(0)), ProjPoint::affine(Rational(1))});
  const auto f = surjectivity_witness(q);
  add(out, "components of the witness", "2", std::to_string(f.components.size()));
  add(out, "tail degree", "(1,1,1)", to_string(component_degree(*f.fan, f.components.back())));
  add(out, "witness is map-stable", "true", yes(stability(f, StabilityMode::map)));
  add(out, "contract(witness) = q", "true", yes(equal_quasimaps(contract(f), q)));

  Quasimap nested;
  nested.fan = catalog::bl0p2();
  nested.components.push_back(Component{{BinaryForm(1, Poly::constant(Rational(1))), BinaryForm(1, Poly::constant(Rational(1))),
                                         BinaryForm(1, Poly::constant(Rational(1))), BinaryForm::zero(0)}});
  nested.markings = {CurvePoint{0, ProjPoint::affine(Rational(0))}, CurvePoint{0, ProjPoint::affine(Rational(1))}};
  const auto g = surjectivity_witness(nested);
  std::string degs;
  for (const auto& c : g.components) degs += (degs.empty() ? "" : " ") + to_string(component_degree(*g.fan, c));
  add(out, "Bl0P2 witness component degrees", "(0,0,0,0) (0,1,1,-1) (1,0,0,1)", degs);
  add(out, "Bl0P2 contract(witness) = q", "true", yes(equal_quasimaps(contract(g), nested)));
  return out;
}

}  // namespace

const std::vector<std::string>& reproduce_cases() {
  static const std::vector<std::string> ids{"table1", "segre", "blowup-embeddings", "family-t", "extension-degree", "witness-demo"};
  return ids;
}

std::vector<ReproCheck> reproduce(const std::string& id) {
  if (id == "table1") return table1();
  if (id == "segre") return segre();
  if (id == "blowup-embeddings") return blowup_embeddings();
  if (id == "family-t") return family_t();
  if (id == "extension-degree") return extension_degree();
  if (id == "witness-demo") return witness_demo();
  throw std::invalid_argument("unknown case \"" + id + "\"");
}

}  // namespace toriq
