#include "toriq/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace toriq {

Poly::Poly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(RatVec{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  RatVec v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& root) { return Poly(RatVec{-root, 1}); }

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::derivative() const {
  RatVec d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  RatVec r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = (c == 1 && i > 0);
    if (!unit) out += c.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  RatVec r = a.coeffs();
  RatVec q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    auto top = static_cast<std::size_t>(i + b.degree());
    if (r[top] == 0) continue;
    Rational f = r[top] * inv;
    q[static_cast<std::size_t>(i)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(i) + j] -= f * bc[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial does not divide: " + b.to_string() + " into " + a.to_string());
  return q;
}

bool divides(const Poly& b, const Poly& a) { return divmod(a, b).second.is_zero(); }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw std::domain_error("negative polynomial power");
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

int multiplicity(const Poly& p, const Poly& f) {
  if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  if (f.degree() < 1) throw std::domain_error("multiplicity of a constant");
  int k = 0;
  Poly cur = p;
  while (true) {
    auto [q, r] = divmod(cur, f);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly a = gcd(f, f.derivative());
  Poly b = exact_quotient(f, a);
  Poly c = exact_quotient(f.derivative(), a);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace toriq
