#include "toriq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "toriq/catalog.hpp"
#include "toriq/contraction.hpp"
#include "toriq/examples.hpp"
#include "toriq/io.hpp"
#include "toriq/reproduce.hpp"

namespace toriq {

namespace {

using io::Json;

constexpr std::int64_t default_max_length = 10;

// Raised when a check ran and failed; exits with status 1.
struct CheckFailed {};

struct Ctx {
  bool json = false;
  std::ostream& out;
};

std::int64_t max_length() {
  const char* v = std::getenv("TORIQ_MAX_LENGTH");
  if (!v || !*v) return default_max_length;
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used != std::string(v).size() || n < 0) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw io::FormatError(std::string("TORIQ_MAX_LENGTH must be a non-negative integer, got \"") + v + "\"");
  }
}

// Degree against -K (Fano) or the ample class used for bounds.
void require_within_cap(const Fan& fan, const CurveClass& beta) {
  const auto cap = max_length();
  const auto deg = intersect(fan, beta, degree_class(fan));
  if (deg > cap)
    throw std::domain_error("class " + to_string(beta) + " has degree " + std::to_string(deg) +
                            " above TORIQ_MAX_LENGTH=" + std::to_string(cap));
}

void emit(Ctx& ctx, const Json& j, const std::string& text) {
  if (ctx.json)
    ctx.out << j.dump(2) << "\n";
  else
    ctx.out << text;
}

std::string quasimap_text(const Quasimap& q) {
  std::ostringstream s;
  for (std::size_t i = 0; i < q.components.size(); ++i) {
    s << "  C" << i << ": [";
    for (std::size_t r = 0; r < q.components[i].sections.size(); ++r) {
      const auto& f = q.components[i].sections[r];
      s << (r ? " : " : "") << (f.is_zero() ? "0" : to_string(f));
    }
    s << "]  degrees " << to_string(CurveClass{q.components[i].degrees()}) << "\n";
  }
  for (const auto& e : q.nodes)
    s << "  node C" << e.a.component << to_string(e.a.point) << " ~ C" << e.b.component << to_string(e.b.point) << "\n";
  for (const auto& m : q.markings) s << "  marking C" << m.component << to_string(m.point) << "\n";
  return s.str();
}

Json ray_sets(const std::vector<RaySet>& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.indices());
  return j;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

Quasimap load_quasimap(const std::string& path) { return io::quasimap_from_json(io::read_json_file(path)); }
EmbeddingSpec load_embedding(const std::string& path) {
  if (path == "segre" && !std::filesystem::exists(path)) return catalog::segre_embedding();
  if (path == "blowup" && !std::filesystem::exists(path)) return catalog::blowup_embedding();
  return io::embedding_from_json(io::read_json_file(path));
}

int fan_validate(Ctx& ctx, const std::string& path) {
  std::vector<std::string> bad;
  if (std::filesystem::exists(path) || !catalog::by_name(path)) {
    const Json j = io::read_json_file(path);
    if (j.is_string()) {
      if (!catalog::by_name(j.get<std::string>())) bad.push_back("unknown catalog fan");
    } else {
      bad = validate_fan(io::fan_data_from_json(j));
    }
  }
  Json out{{"valid", bad.empty()}, {"violations", bad}};
  std::string text = bad.empty() ? "valid\n" : "invalid\n";
  for (const auto& b : bad) text += "  - " + b + "\n";
  emit(ctx, out, text);
  return bad.empty() ? 0 : 1;
}

int fan_info(Ctx& ctx, const std::string& path) {
  const auto fan = io::load_fan(path);
  const bool fano = is_fano(*fan);
  Json j;
  j["name"] = fan->name();
  j["dim"] = fan->dim();
  j["rays"] = fan->num_rays();
  j["max_cones"] = fan->num_cones();
  j["picard_rank"] = fan->picard_rank();
  j["anchor_rays"] = anchor_rays(*fan);
  j["primitive_collections"] = ray_sets(primitive_collections(*fan));
  Json mori = Json::array(), hb = Json::array();
  std::vector<std::string> mori_t, hb_t;
  for (const auto& c : mori_generators(*fan)) {
    mori.push_back(c.pairings);
    mori_t.push_back(to_string(c));
  }
  for (const auto& d : nef_hilbert_basis(*fan)) {
    hb.push_back(io::to_json(d));
    hb_t.push_back(to_string(d));
  }
  j["mori_generators"] = mori;
  j["nef_hilbert_basis"] = hb;
  j["anticanonical"] = io::to_json(anticanonical(*fan));
  j["fano"] = fano;
  j["projective"] = is_projective(*fan);
  std::optional<bool> relaxed;
  if (!fano && is_projective(*fan)) relaxed = relaxed_surjectivity_condition(*fan, max_length());
  if (relaxed) j["relaxed_surjectivity_condition"] = *relaxed;
  std::ostringstream t;
  t << "fan " << (fan->name().empty() ? path : fan->name()) << ": dim " << fan->dim() << ", " << fan->num_rays()
    << " rays, " << fan->num_cones() << " maximal cones\n";
  t << "Picard rank: " << fan->picard_rank() << " (anchor rays " << to_string(RaySet(anchor_rays(*fan))) << ")\n";
  std::vector<std::string> pc;
  for (const auto& s : primitive_collections(*fan)) pc.push_back(to_string(s));
  t << "primitive collections: " << join(pc, " ") << "\n";
  t << "Mori generators (pairings): " << join(mori_t, " ") << "\n";
  t << "nef Hilbert basis (anchor coords): " << join(hb_t, " ") << "\n";
  t << "-K (anchor coords): " << to_string(anticanonical(*fan)) << "\n";
  t << "Fano: " << (fano ? "true" : "false") << "\n";
  if (relaxed)
    t << "relaxed surjectivity condition (degree <= " << max_length() << "): " << (*relaxed ? "true" : "false") << "\n";
  emit(ctx, j, t.str());
  return 0;
}

int class_length(Ctx& ctx, const std::string& fan_path, const std::string& cls) {
  const auto fan = io::load_fan(fan_path);
  const auto beta = io::parse_class(*fan, cls);
  const bool eff = is_effective(*fan, beta);
  Json j{{"class", io::to_json(beta)}, {"anchor_coords", anchor_coordinates(*fan, beta)}, {"length", length(beta)},
         {"effective", eff}};
  emit(ctx, j,
       "class " + to_string(beta) + " (anchor " + to_string(CurveClass{anchor_coordinates(*fan, beta)}) + ")\nlength " +
           std::to_string(length(beta)) + "\neffective " + (eff ? "true" : "false") + "\n");
  return 0;
}

int class_factor(Ctx& ctx, const std::string& fan_path, const std::string& cls) {
  const auto fan = io::load_fan(fan_path);
  const auto beta = io::parse_class(*fan, cls);
  if (!is_effective(*fan, beta) || beta.is_zero()) throw std::domain_error("class " + to_string(beta) + " is not effective and nonzero");
  require_within_cap(*fan, beta);
  const auto fs = factorizations(*fan, beta);
  Json list = Json::array();
  std::string t = "class " + to_string(beta) + ": " + (fs.empty() ? "irreducible" : std::to_string(fs.size()) + " factorizations") + "\n";
  for (const auto& [a, b] : fs) {
    list.push_back(Json::array({io::to_json(a), io::to_json(b)}));
    t += "  " + to_string(a) + " + " + to_string(b) + "\n";
  }
  emit(ctx, Json{{"class", io::to_json(beta)}, {"irreducible", fs.empty()}, {"factorizations", list}}, t);
  return 0;
}

int class_push(Ctx& ctx, const std::string& emb_path, const std::string& cls) {
  const auto e = load_embedding(emb_path);
  require_valid(e);
  const auto beta = io::parse_class(*e.source, cls);
  const auto img = pushforward_curves(e, beta);
  emit(ctx, Json{{"class", io::to_json(beta)}, {"pushforward", io::to_json(img)}},
       "iota_* " + to_string(beta) + " = " + to_string(img) + "\n");
  return 0;
}

int basepoint_degree(Ctx& ctx, const std::string& fan_path, const std::string& orders) {
  const auto fan = io::load_fan(fan_path);
  OrderVector ord;
  try {
    ord = parse_orders(orders);
  } catch (const std::invalid_argument& e) {
    throw io::FormatError(e.what());
  }
  if (static_cast<int>(ord.size()) != fan->num_rays())
    throw io::FormatError("expected " + std::to_string(fan->num_rays()) + " orders, got " + std::to_string(ord.size()));
  const auto d = degree_at_point(*fan, ord);
  const auto l = length_at_point(*fan, ord);
  const auto ld = length_from_degree(*fan, d.beta, ord.vanishing());
  std::vector<RaySet> wc;
  std::vector<std::string> wt;
  for (int c : d.witnesses) {
    wc.push_back(fan->cone(c));
    wt.push_back(to_string(fan->cone(c)));
  }
  Json j{{"orders", io::to_json(ord)},
         {"beta", io::to_json(d.beta)},
         {"anchor_coords", anchor_coordinates(*fan, d.beta)},
         {"witness_cones", d.witnesses},
         {"witness_rays", ray_sets(wc)},
         {"basepoint", !d.beta.is_zero()},
         {"length", l},
         {"length_from_degree", ld}};
  emit(ctx, j,
       "beta_x = " + to_string(d.beta) + " (anchor " + to_string(CurveClass{anchor_coordinates(*fan, d.beta)}) +
           ")\nwitness cones: " + join(wt, " ") + "\nl(x) = " + std::to_string(l) +
           "\nminimum of beta_x.D_rho outside cones: " + std::to_string(ld) + "\n");
  return 0;
}

int quasimap_analyze(Ctx& ctx, const std::string& path) {
  const auto q = load_quasimap(path);
  const auto bad = validate_quasimap(q);
  if (!bad.empty()) {
    std::string t = "invalid quasimap\n";
    for (const auto& b : bad) t += "  - " + b + "\n";
    emit(ctx, Json{{"valid", false}, {"violations", bad}}, t);
    return 1;
  }
  const Fan& fan = *q.fan;
  const auto deg = degrees(q);
  const auto bps = basepoints(q);
  const auto reg = regular_extension(q);
  const auto reg_deg = degrees(reg).total;
  CurveClass sum = reg_deg;
  Json bj = Json::array();
  std::string bt;
  for (const auto& b : bps) {
    sum += static_cast<std::int64_t>(b.place.degree()) * b.beta;
    const auto l = length_at_point(fan, b.ord);
    bj.push_back(Json{{"component", b.component}, {"place", io::to_json(b.place)}, {"orders", io::to_json(b.ord)},
                      {"beta", io::to_json(b.beta)}, {"length", l}});
    bt += "  C" + std::to_string(b.component) + " " + to_string(b.place) + ": ord " + to_string(b.ord) + ", beta_x " +
          to_string(b.beta) + ", l(x) " + std::to_string(l) + "\n";
  }
  const bool qstable = stability(q, StabilityMode::quasimap);
  std::optional<bool> mstable;
  if (bps.empty() && is_projective(fan)) mstable = stability(q, StabilityMode::map, ample_class(fan));
  Json per = Json::array();
  for (const auto& c : deg.per_component) per.push_back(c.pairings);
  Json j{{"valid", true},
         {"degree", io::to_json(deg.total)},
         {"component_degrees", per},
         {"basepoints", bj},
         {"regular_extension_degree", io::to_json(reg_deg)},
         {"degree_decomposition_holds", sum == deg.total},
         {"quasimap_stable", qstable},
         {"regular_extension", io::to_json(reg)}};
  if (mstable) j["map_stable"] = *mstable;
  std::ostringstream t;
  t << "valid quasimap to " << (fan.name().empty() ? "target" : fan.name()) << "\n" << quasimap_text(q);
  t << "degree " << to_string(deg.total) << "\n";
  t << "basepoints: " << bps.size() << "\n" << bt;
  t << "regular extension degree " << to_string(reg_deg) << "; degree = extension + sum of basepoint degrees: "
    << (sum == deg.total ? "true" : "false") << "\n";
  t << "quasimap-stable: " << (qstable ? "true" : "false") << "\n";
  t << "map-stable: " << (mstable ? (*mstable ? "true" : "false") : "n/a (has basepoints)") << "\n";
  t << "regular extension:\n" << quasimap_text(reg);
  emit(ctx, j, t.str());
  return 0;
}

int embed_build(Ctx& ctx, const std::string& fan_path) {
  const auto e = build_epic_embedding(io::load_fan(fan_path));
  ctx.out << io::to_json(e).dump(2) << "\n";
  return 0;
}

int embed_check(Ctx& ctx, const std::string& path) {
  const auto e = load_embedding(path);
  const auto bad = validate_embedding(e);
  Json j{{"valid", bad.empty()}, {"violations", bad}};
  std::string t = bad.empty() ? "valid embedding\n" : "invalid embedding\n";
  for (const auto& b : bad) t += "  - " + b + "\n";
  if (bad.empty()) {
    const bool epic = epic_check(e);
    j["epic"] = epic;
    t += std::string("epic: ") + (epic ? "true" : "false") + "\n";
  }
  emit(ctx, j, t);
  return bad.empty() ? 0 : 1;
}

int embed_ibar(Ctx& ctx, const std::string& emb, const std::string& qpath) {
  const auto e = load_embedding(emb);
  require_valid(e);
  auto q = load_quasimap(qpath);
  ctx.out << io::to_json(apply_ibar(e, q)).dump(2) << "\n";
  return 0;
}

int embed_fibre(Ctx& ctx, const std::string& emb, const std::string& qpath, const std::string& cls) {
  const auto e = load_embedding(emb);
  require_valid(e);
  const auto q = load_quasimap(qpath);
  const auto beta = io::parse_class(*e.source, cls);
  require_within_cap(*e.source, beta);
  const auto fibre = fibre_enumeration(e, q, beta);
  Json list = Json::array();
  std::string t = std::to_string(fibre.size()) + " preimages of class " + to_string(beta) + "\n";
  int i = 0;
  for (const auto& f : fibre) {
    list.push_back(io::to_json(f));
    t += "preimage " + std::to_string(i++) + ":\n" + quasimap_text(f);
  }
  emit(ctx, Json{{"class", io::to_json(beta)}, {"count", fibre.size()}, {"quasimaps", list}}, t);
  return 0;
}

int contract_check(Ctx& ctx, const std::string& path) {
  const auto f = load_quasimap(path);
  const auto r = contraction_condition(f);
  Json tails = Json::array();
  std::string t;
  for (const auto& c : r.tails) {
    tails.push_back(Json{{"components", c.tail.components}, {"attach", io::to_json(c.tail.attach)},
                         {"beta", io::to_json(c.tail.beta)}, {"failing_rays", c.failing_rays}, {"ok", c.ok()}});
    std::vector<std::string> fr;
    for (int rho : c.failing_rays) fr.push_back(std::to_string(rho));
    t += "  tail at C" + std::to_string(c.tail.attach.component) + to_string(c.tail.attach.point) + ", class " +
         to_string(c.tail.beta) + ": " + (c.ok() ? "ok" : "fails on rays " + join(fr, ",")) + "\n";
  }
  emit(ctx, Json{{"tails", tails}, {"ok", r.ok()}},
       std::to_string(r.tails.size()) + " rational tails\n" + t + "condition: " + (r.ok() ? "holds" : "fails") + "\n");
  return r.ok() ? 0 : 1;
}

int contract_apply(Ctx& ctx, const std::string& path) {
  ctx.out << io::to_json(contract(load_quasimap(path))).dump(2) << "\n";
  return 0;
}

int graft_cmd(Ctx& ctx, const std::string& qpath, const std::string& place, int component, const std::string& tail_path,
              const std::string& attach) {
  const auto q = load_quasimap(qpath);
  require_valid(q);
  const CurvePoint at{component, io::parse_point(place)};
  ProjPoint a = ProjPoint::affine(Rational(0));
  Component tail;
  if (tail_path.empty()) {
    if (!attach.empty()) throw io::FormatError("--attach needs --tail");
    int next = 1;
    tail = default_tail(q, at, next);
  } else {
    const Json j = io::read_json_file(tail_path);
    tail = io::component_from_json(j);
    if (j.is_object() && j.contains("attach")) a = io::point_from_json(j.at("attach"));
    if (!attach.empty()) a = io::parse_point(attach);
  }
  ctx.out << io::to_json(graft(q, at, tail, a)).dump(2) << "\n";
  return 0;
}

int witness_cmd(Ctx& ctx, const std::string& path) {
  ctx.out << io::to_json(surjectivity_witness(load_quasimap(path))).dump(2) << "\n";
  return 0;
}

int reproduce_cmd(Ctx& ctx, const std::string& id) {
  const auto ids = id == "all" ? reproduce_cases() : std::vector<std::string>{id};
  Json cases = Json::array();
  std::ostringstream t;
  int failed = 0;
  for (const auto& c : ids) {
    const auto checks = reproduce(c);
    Json list = Json::array();
    int pass = 0;
    t << c << "\n";
    for (const auto& k : checks) {
      pass += k.pass;
      list.push_back(Json{{"name", k.name}, {"expected", k.expected}, {"computed", k.computed}, {"pass", k.pass}});
      t << "  [" << (k.pass ? "PASS" : "FAIL") << "] " << k.name << ": computed " << k.computed;
      if (!k.pass) t << ", expected " << k.expected;
      t << "\n";
    }
    t << "  " << pass << "/" << checks.size() << " checks match\n";
    failed += pass != static_cast<int>(checks.size());
    cases.push_back(Json{{"case", c}, {"checks", list}, {"passed", pass}, {"total", checks.size()}});
  }
  emit(ctx, ids.size() == 1 ? cases[0] : Json{{"cases", cases}}, t.str());
  return failed ? 1 : 0;
}

int example_cmd(Ctx& ctx, const std::string& name, const std::string& t) {
  Json j;
  if (name == "p2-line") {
    j = io::to_json(examples::p2_line({ProjPoint::affine(Rational(0)), ProjPoint::affine(Rational(1))}));
  } else if (name == "segre-q1") {
    j = io::to_json(examples::segre_q1());
  } else if (name == "segre-q2") {
    j = io::to_json(examples::segre_q2());
  } else if (name == "family") {
    j = io::to_json(examples::family_map(parse_rational(t)));
  } else if (name == "family-contracted") {
    j = io::to_json(examples::family_contracted());
  } else if (name == "segre-embedding") {
    j = io::to_json(catalog::segre_embedding());
  } else if (name == "blowup-embedding") {
    j = io::to_json(catalog::blowup_embedding());
  } else if (auto fan = catalog::by_name(name)) {
    j = io::to_json(*fan);
  } else {
    throw io::FormatError("unknown example \"" + name + "\"");
  }
  ctx.out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric quasimaps: basepoint degrees, epic embeddings, contraction and grafting"};
  app.name("toriq");
  app.require_subcommand(1);
  app.fallthrough();
  Ctx ctx{false, out};
  app.add_flag("--json", ctx.json, "machine-readable output");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  std::string a1, a2, cls, orders, place, tail, attach, t = "0";
  int component = 0;

  auto* fan = app.add_subcommand("fan", "fan validation and invariants");
  fan->require_subcommand(1);
  auto* fv = fan->add_subcommand("validate", "check a fan file");
  fv->add_option("fan", a1, "fan file or catalog name")->required();
  on(fv, [&] { return fan_validate(ctx, a1); });
  auto* fi = fan->add_subcommand("info", "Picard rank, cones, Fano test");
  fi->add_option("fan", a1, "fan file or catalog name")->required();
  on(fi, [&] { return fan_info(ctx, a1); });

  auto* cl = app.add_subcommand("class", "curve classes");
  cl->require_subcommand(1);
  auto* cp = cl->add_subcommand("push", "pushforward along an embedding");
  cp->add_option("embedding", a1, "embedding file, or segre / blowup")->required();
  cp->add_option("--class", cls, "pairings, e.g. 1,0,0,1")->required();
  on(cp, [&] { return class_push(ctx, a1, cls); });
  auto* cln = cl->add_subcommand("length", "length and effectivity");
  cln->add_option("fan", a1)->required();
  cln->add_option("--class", cls)->required();
  on(cln, [&] { return class_length(ctx, a1, cls); });
  auto* cf = cl->add_subcommand("factor", "factorizations into effective classes");
  cf->add_option("fan", a1)->required();
  cf->add_option("--class", cls)->required();
  on(cf, [&] { return class_factor(ctx, a1, cls); });

  auto* bd = app.add_subcommand("basepoint-degree", "degree and length at a point from vanishing orders");
  bd->add_option("--fan", a1)->required();
  bd->add_option("--orders", orders, "comma separated, inf for a zero section")->required();
  on(bd, [&] { return basepoint_degree(ctx, a1, orders); });

  auto* qm = app.add_subcommand("quasimap", "quasimap analysis");
  qm->require_subcommand(1);
  auto* qa = qm->add_subcommand("analyze", "validity, degrees, basepoints, stability, regular extension");
  qa->add_option("quasimap", a1)->required();
  on(qa, [&] { return quasimap_analyze(ctx, a1); });

  auto* em = app.add_subcommand("embed", "epic embeddings into products of projective spaces");
  em->require_subcommand(1);
  auto* eb = em->add_subcommand("build", "epic closed embedding from nef line bundles");
  eb->add_option("fan", a1)->required();
  on(eb, [&] { return embed_build(ctx, a1); });
  auto* ec = em->add_subcommand("check", "validate monomial data and test epicness");
  ec->add_option("embedding", a1)->required();
  on(ec, [&] { return embed_check(ctx, a1); });
  auto* ep = em->add_subcommand("push", "pushforward of a curve class");
  ep->add_option("embedding", a1)->required();
  ep->add_option("--class", cls)->required();
  on(ep, [&] { return class_push(ctx, a1, cls); });
  auto* ei = em->add_subcommand("ibar", "image of a quasimap");
  ei->add_option("embedding", a1)->required();
  ei->add_option("quasimap", a2)->required();
  on(ei, [&] { return embed_ibar(ctx, a1, a2); });
  auto* ef = em->add_subcommand("fibre", "source quasimaps of a class mapping to a target quasimap");
  ef->add_option("embedding", a1)->required();
  ef->add_option("quasimap", a2)->required();
  ef->add_option("--class", cls)->required();
  on(ef, [&] { return embed_fibre(ctx, a1, a2, cls); });

  auto* ct = app.add_subcommand("contract", "map to quasimap contraction");
  ct->require_subcommand(1);
  auto* cc = ct->add_subcommand("check", "contraction condition per rational tail");
  cc->add_option("map", a1)->required();
  on(cc, [&] { return contract_check(ctx, a1); });
  auto* ca = ct->add_subcommand("apply", "contract the rational tails");
  ca->add_option("map", a1)->required();
  on(ca, [&] { return contract_apply(ctx, a1); });

  auto* gr = app.add_subcommand("graft", "graft a rational tail at a rational basepoint");
  gr->add_option("quasimap", a1)->required();
  gr->add_option("--place", place, "basepoint, e.g. [0:1], inf or 2/3")->required();
  gr->add_option("--component", component, "component holding the basepoint");
  gr->add_option("--tail", tail, "tail sections (component JSON, optional \"attach\")");
  gr->add_option("--attach", attach, "attaching point on the tail (default [1:0])");
  on(gr, [&] { return graft_cmd(ctx, a1, place, component, tail, attach); });

  auto* wi = app.add_subcommand("witness", "stable map contracting to a stable quasimap");
  wi->add_option("quasimap", a1)->required();
  on(wi, [&] { return witness_cmd(ctx, a1); });

  auto* rp = app.add_subcommand("reproduce", "rerun a bundled worked case");
  rp->add_option("case", a1, "table1, segre, blowup-embeddings, family-t, extension-degree, witness-demo or all")
      ->required();
  on(rp, [&] { return reproduce_cmd(ctx, a1); });

  auto* ex = app.add_subcommand("example", "print a bundled fan, quasimap or embedding as JSON");
  ex->add_option("name", a1,
                 "p2-line, segre-q1, segre-q2, family, family-contracted, segre-embedding, blowup-embedding or a fan name")
      ->required();
  ex->add_option("--t", t, "parameter of the family");
  on(ex, [&] { return example_cmd(ctx, a1, t); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toriq
