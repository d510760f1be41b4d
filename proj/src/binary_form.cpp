#include "toriq/binary_form.hpp"

#include <stdexcept>

namespace toriq {

ProjPoint::ProjPoint(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("[0:0] is not a point of P^1");
  if (a == 0) {
    inf_ = true;
    z_ = 0;
  } else {
    z_ = b / a;
    z_.canonicalize();
  }
}

const Rational& ProjPoint::z() const {
  if (inf_) throw std::logic_error("affine coordinate of the point at infinity");
  return z_;
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
  if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.inf_) return std::strong_ordering::equal;
  int c = cmp(a.z_, b.z_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const ProjPoint& p) { return p.is_infinity() ? "[0:1]" : "[1:" + to_string(p.z()) + "]"; }

Place Place::of(const ProjPoint& p) {
  if (p.is_infinity()) return at_infinity();
  return Place{false, Poly::linear_root(p.z())};
}

Place Place::finite(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("a place needs a nonconstant polynomial");
  if (!is_irreducible(f)) throw std::invalid_argument("place polynomial " + f.to_string() + " is reducible");
  return Place{false, f.monic()};
}

ProjPoint Place::point() const {
  if (infinity) return ProjPoint::infinity();
  if (factor.degree() != 1) throw std::logic_error("place " + to_string(*this) + " is not rational");
  Rational root = -factor.coeff(0);
  return ProjPoint::affine(root);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.infinity != b.infinity) return a.infinity ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.infinity) return std::strong_ordering::equal;
  return a.factor <=> b.factor;
}

std::string to_string(const Place& p) {
  if (p.infinity) return "[0:1]";
  if (p.factor.degree() == 1) return to_string(p.point());
  return p.factor.to_string();
}

BinaryForm::BinaryForm(int degree, Poly affine) : d_(degree), p_(std::move(affine)) {
  if (!p_.is_zero() && (d_ < 0 || p_.degree() > d_))
    throw std::invalid_argument("polynomial " + p_.to_string() + " does not fit degree " + std::to_string(d_));
}

BinaryForm BinaryForm::from_coeffs(int degree, const RatVec& coeffs) {
  if (degree < 0) {
    if (!coeffs.empty()) throw std::invalid_argument("a form of negative degree has no coefficients");
    return zero(degree);
  }
  if (static_cast<int>(coeffs.size()) != degree + 1)
    throw std::invalid_argument("degree " + std::to_string(degree) + " form needs " + std::to_string(degree + 1) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  return BinaryForm(degree, Poly(coeffs));
}

RatVec BinaryForm::coeffs() const {
  RatVec out;
  for (int i = 0; i <= d_; ++i) out.push_back(p_.coeff(i));
  return out;
}

Rational BinaryForm::eval(const ProjPoint& pt) const {
  if (pt.is_infinity()) return p_.coeff(d_);
  return p_.eval(pt.z());
}

Order BinaryForm::order_at(const Place& place) const {
  if (is_zero()) return Order::infinity();
  if (place.infinity) return Order(d_ - p_.degree());
  return Order(multiplicity(p_, place.factor));
}

BinaryForm BinaryForm::twisted(const Place& place, std::int64_t e) const {
  const int shift = static_cast<int>(e) * place.degree();
  if (is_zero() || place.infinity || e == 0) {
    BinaryForm out = *this;
    out.d_ += shift;
    if (!out.is_zero() && out.p_.degree() > out.d_)
      throw std::domain_error("form " + to_string(*this) + " does not vanish to order " + std::to_string(-e) +
                              " at infinity");
    return out;
  }
  Poly fe = pow(place.factor, static_cast<int>(e > 0 ? e : -e));
  if (e > 0) return BinaryForm(d_ + shift, p_ * fe);
  if (!divides(fe, p_))
    throw std::domain_error("form " + to_string(*this) + " does not vanish to order " + std::to_string(-e) + " at " +
                            to_string(place));
  return BinaryForm(d_ + shift, exact_quotient(p_, fe));
}

BinaryForm BinaryForm::scaled(const Rational& c) const { return BinaryForm(d_, p_ * c); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) { return BinaryForm(a.d_ + b.d_, a.p_ * b.p_); }

BinaryForm pow(const BinaryForm& f, int e) {
  if (e < 0) throw std::invalid_argument("negative power of a form");
  BinaryForm out = BinaryForm::constant(Rational(1));
  for (int i = 0; i < e; ++i) out = out * f;
  return out;
}

std::string to_string(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  const int d = f.degree();
  auto mono = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
  };
  for (int i = 0; i <= d; ++i) {
    const Rational& a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    std::string m = mono("x0", d - i);
    std::string m1 = mono("x1", i);
    if (!m.empty() && !m1.empty()) m += "*";
    m += m1;
    Rational mag = abs(a);
    std::string coef = (mag == 1 && !m.empty()) ? "" : to_string(mag) + (m.empty() ? "" : "*");
    if (out.empty())
      out = (a < 0 ? "-" : "") + coef + m;
    else
      out += (a < 0 ? " - " : " + ") + coef + m;
  }
  return out;
}

}  // namespace toriq
