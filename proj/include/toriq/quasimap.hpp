#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriq/basepoint.hpp"
#include "toriq/binary_form.hpp"
#include "toriq/class_lattice.hpp"

namespace toriq {

struct CurvePoint {
  int component = 0;
  ProjPoint point;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

struct Node {
  CurvePoint a, b;
};

// One section per ray; the line bundle degrees are the form degrees.
struct Component {
  std::vector<BinaryForm> sections;
  IntVec degrees() const;
  RaySet vanishing() const;
  friend bool operator==(const Component&, const Component&) = default;
};

// Genus 0 quasimap: a tree of P^1's with per-ray sections on each component.
struct Quasimap {
  FanPtr fan;
  std::vector<Component> components;
  std::vector<Node> nodes;
  std::vector<CurvePoint> markings;

  int special_points(int component) const;  // markings plus node branches
  std::vector<int> neighbours(int component) const;
};

class QuasimapError : public std::invalid_argument {
 public:
  explicit QuasimapError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Empty iff q is a valid prestable quasimap.
std::vector<std::string> validate_quasimap(const Quasimap& q);
void require_valid(const Quasimap& q);  // throws QuasimapError

struct BasepointPlace {
  int component = 0;
  Place place;
  OrderVector ord;
  CurveClass beta;
};

OrderVector orders_at(const Component& c, const Place& place);
std::vector<BasepointPlace> component_basepoints(const Fan& fan, const Component& c, int index = 0);
std::vector<BasepointPlace> basepoints(const Quasimap& q);
bool is_basepoint(const Fan& fan, const Component& c, const ProjPoint& pt);

// Twist the sections at the place by -beta.  Throws std::domain_error if a
// division is not exact.
Component twist_component(const Fan& fan, const Component& c, const Place& place, const CurveClass& beta);
Quasimap regular_extension(const Quasimap& q);

CurveClass component_degree(const Fan& fan, const Component& c);
struct Degrees {
  CurveClass total;
  std::vector<CurveClass> per_component;
};
Degrees degrees(const Quasimap& q);

enum class StabilityMode { quasimap, map };
// Map mode pairs each component degree with -K_X on Fano targets, otherwise
// with the supplied ample class (std::invalid_argument if missing).
bool stability(const Quasimap& q, StabilityMode mode, const std::optional<DivisorClass>& ample = std::nullopt);

// Chart coordinates of a non-basepoint: the first maximal cone whose
// complement has nonvanishing sections, with z_i = prod s_rho^<m_i,u_rho>.
struct Evaluation {
  int cone = -1;
  RatVec coords;
  RatVec values;  // section values at the normalized representative
};
Evaluation evaluate(const Fan& fan, const Component& c, const ProjPoint& pt);
Evaluation evaluate(const Quasimap& q, int component, const ProjPoint& pt);
bool same_point(const Fan& fan, const Evaluation& a, const Evaluation& b);
std::string to_string(const Fan& fan, const Evaluation& e);

// Regular components define the same morphism P^1 -> X.
bool same_morphism(const Fan& fan, const Component& a, const Component& b);
// Same curve required (nodes as a set, markings in order); otherwise
// std::invalid_argument.
bool equal_quasimaps(const Quasimap& a, const Quasimap& b);

// Scales s_rho by prod_k c_k^{[D_rho]_k} in anchor coordinates: the action of
// a torus element, which leaves the quasimap unchanged.
Component act_by_torus(const Fan& fan, const Component& c, const RatVec& g);

}  // namespace toriq
