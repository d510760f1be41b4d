#include "toriq/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toriq/catalog.hpp"

namespace toriq::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

IntVec int_vec(const Json& j, const char* what) {
  IntVec v;
  for (const auto& x : array(j, what)) v.push_back(integer(x, what));
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  const auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (!j.is_string()) throw FormatError("rational must be an integer or a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

FanData fan_data_from_json(const Json& j) {
  FanData d;
  d.dim = static_cast<int>(integer(field(j, "dim"), "dim"));
  for (const auto& r : array(field(j, "rays"), "rays")) d.rays.push_back(int_vec(r, "ray"));
  for (const auto& c : array(field(j, "max_cones"), "max_cones")) {
    std::vector<int> idx;
    for (auto v : int_vec(c, "cone")) idx.push_back(static_cast<int>(v));
    d.max_cones.emplace_back(idx);
  }
  return d;
}

FanPtr fan_from_json(const Json& j) {
  if (j.is_string()) {
    auto f = catalog::by_name(j.get<std::string>());
    if (!f) throw FormatError("unknown catalog fan \"" + j.get<std::string>() + "\"");
    return f;
  }
  FanData d = fan_data_from_json(j);
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  try {
    return Fan::make(std::move(d), std::move(name));
  } catch (const FanError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const Fan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c.indices());
  Json j;
  if (!fan.name().empty()) j["name"] = fan.name();
  j["dim"] = fan.dim();
  j["rays"] = fan.rays();
  j["max_cones"] = cones;
  return j;
}

FanPtr load_fan(const std::string& name_or_path) {
  if (!std::filesystem::exists(name_or_path))
    if (auto f = catalog::by_name(name_or_path)) return f;
  return fan_from_json(read_json_file(name_or_path));
}

CurveClass class_from_json(const Fan& fan, const Json& j) {
  const Json& p = j.is_object() ? field(j, "pairings") : j;
  try {
    return make_curve_class(fan, int_vec(p, "pairings"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

CurveClass parse_class(const Fan& fan, const std::string& text) {
  IntVec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw FormatError("bad class entry \"" + tok + "\"");
    }
  }
  try {
    if (static_cast<int>(v.size()) == fan.picard_rank() && fan.picard_rank() != fan.num_rays())
      return class_from_anchor(fan, v);
    return make_curve_class(fan, v);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const OrderVector& ord) {
  Json j = Json::array();
  for (const auto& o : ord.orders) {
    if (o.is_inf())
      j.push_back("inf");
    else
      j.push_back(o.value());
  }
  return j;
}

Json to_json(const CurveClass& beta) { return Json{{"pairings", beta.pairings}}; }

Json to_json(const DivisorClass& d) { return Json{{"anchor_cone", d.anchor_cone}, {"coords", d.coords}}; }

BinaryForm form_from_json(const Json& j) {
  const int d = static_cast<int>(integer(field(j, "degree"), "degree"));
  RatVec c;
  for (const auto& x : array(field(j, "coeffs"), "coeffs")) c.push_back(rational_from_json(x));
  if (c.empty()) return BinaryForm::zero(d);
  if (d < 0) throw FormatError("nonzero form of negative degree");
  if (static_cast<int>(c.size()) != d + 1) throw FormatError("form of degree " + std::to_string(d) + " needs " +
                                                             std::to_string(d + 1) + " coefficients");
  return BinaryForm::from_coeffs(d, c);
}

Json to_json(const BinaryForm& f) {
  Json c = Json::array();
  if (!f.is_zero())
    for (const auto& x : f.coeffs()) c.push_back(to_json(x));
  return Json{{"degree", f.degree()}, {"coeffs", c}};
}

ProjPoint parse_point(const std::string& text) {
  std::string t = trim(text);
  if (t == "inf" || t == "infinity") return ProjPoint::infinity();
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  const auto colon = t.find(':');
  try {
    if (colon == std::string::npos) return ProjPoint::affine(parse_rational(trim(t)));
    return ProjPoint(parse_rational(trim(t.substr(0, colon))), parse_rational(trim(t.substr(colon + 1))));
  } catch (const std::invalid_argument& e) {
    throw FormatError("bad point \"" + text + "\": " + e.what());
  }
}

ProjPoint point_from_json(const Json& j) {
  if (j.is_string()) return parse_point(j.get<std::string>());
  const Json& a = array(j, "point");
  if (a.size() != 2) throw FormatError("point must have two coordinates");
  try {
    return ProjPoint(rational_from_json(a[0]), rational_from_json(a[1]));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const ProjPoint& p) {
  if (p.is_infinity()) return Json::array({"0", "1"});
  return Json::array({"1", to_string(p.z())});
}

Json to_json(const Place& p) {
  Json j;
  j["degree"] = p.degree();
  if (p.infinity) {
    j["infinity"] = true;
  } else {
    Json c = Json::array();
    for (const auto& x : p.factor.coeffs()) c.push_back(to_json(x));
    j["factor"] = c;
  }
  if (p.is_rational()) j["point"] = to_json(p.point());
  j["label"] = to_string(p);
  return j;
}

Component component_from_json(const Json& j) {
  const Json& s = j.is_object() ? field(j, "sections") : j;
  Component c;
  for (const auto& f : array(s, "sections")) c.sections.push_back(form_from_json(f));
  return c;
}

Json to_json(const Component& c) {
  Json s = Json::array();
  for (const auto& f : c.sections) s.push_back(to_json(f));
  return s;
}

CurvePoint curve_point_from_json(const Json& j) {
  return CurvePoint{static_cast<int>(integer(field(j, "component"), "component")), point_from_json(field(j, "point"))};
}

Json to_json(const CurvePoint& p) { return Json{{"component", p.component}, {"point", to_json(p.point)}}; }

Quasimap quasimap_from_json(const Json& j) {
  Quasimap q;
  q.fan = fan_from_json(field(j, "fan"));
  for (const auto& c : array(field(j, "components"), "components")) q.components.push_back(component_from_json(c));
  if (j.contains("nodes"))
    for (const auto& e : array(j.at("nodes"), "nodes")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("node must be a pair of curve points");
      q.nodes.push_back(Node{curve_point_from_json(e[0]), curve_point_from_json(e[1])});
    }
  if (j.contains("markings"))
    for (const auto& m : array(j.at("markings"), "markings")) q.markings.push_back(curve_point_from_json(m));
  return q;
}

Json to_json(const Quasimap& q) {
  Json comps = Json::array(), nodes = Json::array(), marks = Json::array();
  for (const auto& c : q.components) comps.push_back(to_json(c));
  for (const auto& e : q.nodes) nodes.push_back(Json::array({to_json(e.a), to_json(e.b)}));
  for (const auto& m : q.markings) marks.push_back(to_json(m));
  return Json{{"fan", to_json(*q.fan)}, {"components", comps}, {"nodes", nodes}, {"markings", marks}};
}

EmbeddingSpec embedding_from_json(const Json& j) {
  EmbeddingSpec e;
  e.source = fan_from_json(field(j, "source_fan"));
  e.target = fan_from_json(field(j, "target_fan"));
  for (const auto& m : array(field(j, "monomials"), "monomials")) {
    Monomial mono;
    if (m.contains("coeff")) mono.coeff = rational_from_json(m.at("coeff"));
    mono.exponents = int_vec(field(m, "exponents"), "exponents");
    e.monomials.push_back(std::move(mono));
  }
  return e;
}

Json to_json(const EmbeddingSpec& e) {
  Json monos = Json::array();
  for (const auto& m : e.monomials) monos.push_back(Json{{"coeff", to_json(m.coeff)}, {"exponents", m.exponents}});
  return Json{{"source_fan", to_json(*e.source)}, {"target_fan", to_json(*e.target)}, {"monomials", monos}};
}

}  // namespace toriq::io
