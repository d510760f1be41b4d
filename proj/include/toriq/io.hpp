#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "toriq/basepoint.hpp"
#include "toriq/embedding.hpp"
#include "toriq/quasimap.hpp"

namespace toriq::io {

using Json = nlohmann::json;

// Input that does not parse against the expected schema.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string& path);  // FormatError on missing file or bad syntax

// Rationals are written as "p" or "p/q" strings; integers are also read.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

// Fan: {"name", "dim", "rays", "max_cones"}, or a catalog name string.
FanPtr fan_from_json(const Json& j);  // FanError when invalid
FanData fan_data_from_json(const Json& j);
Json to_json(const Fan& fan);
// A catalog name or a path to a fan file.
FanPtr load_fan(const std::string& name_or_path);

// Orders as an array of integers and "inf".
Json to_json(const OrderVector& ord);

// {"pairings": [...]} or a bare array.
CurveClass class_from_json(const Fan& fan, const Json& j);
// "1,0,0,1" as pairings, or a list of Picard-rank length as anchor
// coordinates ("2,2" on P1xP1).
CurveClass parse_class(const Fan& fan, const std::string& text);
Json to_json(const CurveClass& beta);
Json to_json(const DivisorClass& d);

// {"degree": d, "coeffs": [...]}; coefficient i multiplies x0^(d-i) x1^i.
// An empty coefficient list is the zero form.
BinaryForm form_from_json(const Json& j);
Json to_json(const BinaryForm& f);

// [a, b] for [a:b]; the strings "inf" and "[a:b]" are also read.
ProjPoint point_from_json(const Json& j);
ProjPoint parse_point(const std::string& text);
Json to_json(const ProjPoint& p);
Json to_json(const Place& p);

// An array of forms or {"sections": [...]}.
Component component_from_json(const Json& j);
Json to_json(const Component& c);

// {"component": i, "point": [a, b]}
CurvePoint curve_point_from_json(const Json& j);
Json to_json(const CurvePoint& p);

// {"fan", "components", "nodes": [[p, p], ...], "markings": [p, ...]}
Quasimap quasimap_from_json(const Json& j);
Json to_json(const Quasimap& q);

// {"source_fan", "target_fan", "monomials": [{"coeff", "exponents"}, ...]}
EmbeddingSpec embedding_from_json(const Json& j);
Json to_json(const EmbeddingSpec& e);

}  // namespace toriq::io
