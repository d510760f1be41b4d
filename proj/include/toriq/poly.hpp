#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "toriq/rational.hpp"

namespace toriq {

// Univariate polynomial over Q, coefficients stored low degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RatVec coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly linear_root(const Rational& root);  // z - root

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& z) const;
  Poly monic() const;
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  // Degree first, then coefficients from the constant term up.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  RatVec c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly exact_quotient(const Poly& a, const Poly& b);  // throws if b does not divide a
bool divides(const Poly& b, const Poly& a);
Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
Poly pow(const Poly& p, int e);

// Largest k with f^k | p, for nonzero p and nonconstant f.
int multiplicity(const Poly& p, const Poly& f);

// Monic squarefree factors with multiplicities (Yun).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Monic irreducible factors over Q with multiplicities, sorted.  The
// constant factor is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& p);
bool is_irreducible(const Poly& p);

}  // namespace toriq
