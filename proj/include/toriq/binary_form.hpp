#pragma once

#include <compare>
#include <string>

#include "toriq/basepoint.hpp"
#include "toriq/poly.hpp"

namespace toriq {

// Point [a:b] of P^1, normalized to [1:z] or [0:1].  The affine chart
// coordinate is z = x1/x0, so [1:0] is z = 0 and [0:1] is infinity.
class ProjPoint {
 public:
  ProjPoint() : z_(0) {}
  ProjPoint(const Rational& a, const Rational& b);
  static ProjPoint affine(const Rational& z) { return ProjPoint(Rational(1), z); }
  static ProjPoint infinity() { return ProjPoint(Rational(0), Rational(1)); }

  bool is_infinity() const { return inf_; }
  const Rational& z() const;  // throws at infinity

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.inf_ == b.inf_ && (a.inf_ || a.z_ == b.z_); }
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

 private:
  Rational z_;
  bool inf_ = false;
};

std::string to_string(const ProjPoint& p);  // "[1:z]" or "[0:1]"

// A closed point of P^1 over Q: infinity or a monic irreducible factor in z.
struct Place {
  bool infinity = false;
  Poly factor;

  static Place at_infinity() { return Place{true, Poly()}; }
  static Place of(const ProjPoint& p);
  static Place finite(const Poly& f);  // f is made monic; must be irreducible

  int degree() const { return infinity ? 1 : factor.degree(); }
  bool is_rational() const { return degree() == 1; }
  ProjPoint point() const;  // rational places only

  friend bool operator==(const Place&, const Place&) = default;
  // finite places first, sorted as polynomials; infinity last
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);
};

std::string to_string(const Place& p);

// Section of O(d) on P^1, stored as its dehomogenization p(z) = s(1, z).
// Coefficient i is that of x0^(d-i) x1^i.  The zero form may carry a
// negative degree (line bundles of negative degree only have zero sections).
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, Poly affine);
  static BinaryForm from_coeffs(int degree, const RatVec& coeffs);
  static BinaryForm zero(int degree) { return BinaryForm(degree, Poly()); }
  static BinaryForm constant(const Rational& c) { return BinaryForm(0, Poly::constant(c)); }

  int degree() const { return d_; }
  const Poly& affine() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  RatVec coeffs() const;  // degree+1 entries; empty for negative degree

  // Value at the normalized representative of the point.
  Rational eval(const ProjPoint& pt) const;
  Order order_at(const Place& place) const;

  // Multiplies by the e-th power of a local equation of the place (degree
  // grows by e * deg(place)); e < 0 divides and throws if not exact.
  BinaryForm twisted(const Place& place, std::int64_t e) const;
  BinaryForm scaled(const Rational& c) const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int d_ = 0;
  Poly p_;
};

BinaryForm pow(const BinaryForm& f, int e);
std::string to_string(const BinaryForm& f);  // homogeneous, in x0, x1

}  // namespace toriq
