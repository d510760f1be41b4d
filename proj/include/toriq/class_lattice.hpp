#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriq/fan.hpp"
#include "toriq/rational.hpp"

namespace toriq {

// Curve class as its pairing vector (beta . D_rho)_rho.
struct CurveClass {
  IntVec pairings;

  std::int64_t operator[](int rho) const { return pairings.at(static_cast<std::size_t>(rho)); }
  bool is_zero() const;

  CurveClass& operator+=(const CurveClass& o);
  CurveClass& operator-=(const CurveClass& o);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
  friend CurveClass operator*(std::int64_t k, CurveClass a);
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

std::string to_string(const CurveClass& b);

// Divisor class in the basis {[D_rho] : rho not in the anchor cone}.
struct DivisorClass {
  int anchor_cone = 0;
  IntVec coords;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

std::string to_string(const DivisorClass& d);

// Rays outside the anchor cone, in increasing order.
std::vector<int> anchor_rays(const Fan& fan, int anchor_cone = 0);

// Validates length and the relation sum_rho d_rho u_rho = 0.
CurveClass make_curve_class(const Fan& fan, IntVec pairings);
CurveClass zero_class(const Fan& fan);

IntVec anchor_coordinates(const Fan& fan, const CurveClass& beta);
CurveClass class_from_anchor(const Fan& fan, const IntVec& coords);

DivisorClass divisor_class(const Fan& fan, int rho, int anchor_cone = 0);
// sum_rho a_rho [D_rho]
DivisorClass divisor_from_rays(const Fan& fan, const IntVec& a, int anchor_cone = 0);
DivisorClass to_anchor(const Fan& fan, const DivisorClass& d, int anchor_cone = 0);
DivisorClass anticanonical(const Fan& fan);

std::int64_t intersect(const Fan& fan, const CurveClass& beta, const DivisorClass& d);

// The class pairing to a_rho with D_rho for rho outside sigma; pairings on
// the rays of sigma are -sum_{rho not in sigma} a_rho <m_i,u_rho>.
RatVec beta_a_sigma(const Fan& fan, const RatVec& a, int cone);
CurveClass beta_a_sigma(const Fan& fan, const IntVec& a, int cone);

// One class per wall, in the fan's wall order.
std::vector<CurveClass> wall_curve_classes(const Fan& fan);
// Distinct wall classes, sorted.
std::vector<CurveClass> mori_generators(const Fan& fan);

std::vector<DivisorClass> nef_cone_rays(const Fan& fan);
bool is_effective(const Fan& fan, const CurveClass& beta);
bool is_nef(const Fan& fan, const DivisorClass& d);
bool is_ample(const Fan& fan, const DivisorClass& d);
bool is_fano(const Fan& fan);
bool is_projective(const Fan& fan);
// Sum of the nef extreme rays; ample exactly when the fan is projective.
std::optional<DivisorClass> ample_class(const Fan& fan);

std::vector<DivisorClass> nef_hilbert_basis(const Fan& fan);

std::int64_t length(const CurveClass& beta);

// All effective gamma with beta - gamma effective (including 0 and beta).
std::vector<CurveClass> effective_classes_below(const Fan& fan, const CurveClass& beta);
// All effective gamma with h . gamma <= bound; h must be ample.
std::vector<CurveClass> effective_classes_up_to(const Fan& fan, const DivisorClass& h, std::int64_t bound);

// Unordered splittings beta = b1 + b2 into nonzero effective classes, each
// pair listed once with b1 <= b2.
std::vector<std::pair<CurveClass, CurveClass>> factorizations(const Fan& fan, const CurveClass& beta);
bool is_irreducible(const Fan& fan, const CurveClass& beta);

// Checks the relaxed surjectivity condition for classes of degree at most
// bound against the degree class (-K when Fano, ample_class otherwise).
// Throws std::invalid_argument without a bound.
bool relaxed_surjectivity_condition(const Fan& fan, std::optional<std::int64_t> bound);

// -K_X when Fano, otherwise ample_class; throws if the fan is not projective.
DivisorClass degree_class(const Fan& fan);

}  // namespace toriq
