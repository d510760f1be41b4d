#include "toriq/basepoint.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace toriq {

std::int64_t Order::value() const {
  if (inf_) throw std::logic_error("value of an infinite order");
  return v_;
}

std::string to_string(const Order& o) { return o.is_inf() ? "inf" : std::to_string(o.value()); }

RaySet OrderVector::vanishing() const {
  std::vector<int> v;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i].is_inf()) v.push_back(static_cast<int>(i));
  return RaySet(v);
}

OrderVector parse_orders(std::string_view text) {
  OrderVector ord;
  std::string s(text);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok == "inf") {
      ord.orders.push_back(Order::infinity());
      continue;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad order entry '" + tok + "'");
    }
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad order entry '" + tok + "'");
    ord.orders.emplace_back(static_cast<std::int64_t>(v));
  }
  return ord;
}

std::string to_string(const OrderVector& ord) {
  std::string out = "(";
  for (std::size_t i = 0; i < ord.size(); ++i) out += (i ? "," : "") + to_string(ord.orders[i]);
  return out + ")";
}

namespace {

void check_size(const Fan& fan, const OrderVector& ord) {
  if (static_cast<int>(ord.size()) != fan.num_rays())
    throw std::invalid_argument("order vector needs " + std::to_string(fan.num_rays()) + " entries");
  if (!fan.is_face(ord.vanishing()))
    throw std::invalid_argument("vanishing set " + to_string(ord.vanishing()) + " contains a primitive collection");
}

IntVec finite_part(const Fan& fan, const OrderVector& ord, int cone) {
  IntVec a(static_cast<std::size_t>(fan.num_rays()), 0);
  const auto& s = fan.cone(cone);
  for (int rho = 0; rho < fan.num_rays(); ++rho)
    if (!s.contains(rho)) a[static_cast<std::size_t>(rho)] = ord[rho].value();
  return a;
}

}  // namespace

PointDegree degree_at_point(const Fan& fan, const OrderVector& ord) {
  check_size(fan, ord);
  const RaySet v = ord.vanishing();
  std::optional<CurveClass> found;
  std::vector<int> witnesses;
  for (int c = 0; c < fan.num_cones(); ++c) {
    if (!v.subset_of(fan.cone(c))) continue;
    CurveClass b = beta_a_sigma(fan, finite_part(fan, ord, c), c);
    bool ok = true;
    for (int rho : fan.cone(c))
      if (!ord[rho].is_inf() && ord[rho].value() < b[rho]) ok = false;
    if (!ok) continue;
    if (found && *found != b)
      throw std::logic_error("two cones give different basepoint degrees " + to_string(*found) + " and " +
                             to_string(b) + " for " + to_string(ord));
    found = b;
    witnesses.push_back(c);
  }
  if (!found) throw std::logic_error("no maximal cone yields a basepoint degree for " + to_string(ord));
  return PointDegree{*found, witnesses};
}

std::int64_t length_at_point(const Fan& fan, const OrderVector& ord) {
  check_size(fan, ord);
  const RaySet v = ord.vanishing();
  auto best = std::numeric_limits<std::int64_t>::max();
  for (int c = 0; c < fan.num_cones(); ++c) {
    if (!v.subset_of(fan.cone(c))) continue;
    std::int64_t s = 0;
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (!fan.cone(c).contains(rho)) s += ord[rho].value();
    best = std::min(best, s);
  }
  return best;
}

std::int64_t length_from_degree(const Fan& fan, const CurveClass& beta, const RaySet& vanishing) {
  if (static_cast<int>(beta.pairings.size()) != fan.num_rays()) throw std::invalid_argument("class has wrong size");
  auto best = std::numeric_limits<std::int64_t>::max();
  for (int c = 0; c < fan.num_cones(); ++c) {
    if (!vanishing.subset_of(fan.cone(c))) continue;
    std::int64_t s = 0;
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (!fan.cone(c).contains(rho)) s += beta[rho];
    best = std::min(best, s);
  }
  if (best == std::numeric_limits<std::int64_t>::max()) throw std::invalid_argument("vanishing set is not a face");
  return best;
}

std::optional<OrderVector> twist_orders(const Fan& fan, const OrderVector& ord, const CurveClass& beta) {
  if (static_cast<int>(ord.size()) != fan.num_rays() || static_cast<int>(beta.pairings.size()) != fan.num_rays())
    throw std::invalid_argument("size mismatch in twist_orders");
  OrderVector out = ord;
  for (int rho = 0; rho < fan.num_rays(); ++rho) {
    if (ord[rho].is_inf()) continue;
    std::int64_t v = ord[rho].value() - beta[rho];
    if (v < 0) return std::nullopt;
    out.orders[static_cast<std::size_t>(rho)] = v;
  }
  return out;
}

bool is_non_basepoint(const Fan& fan, const OrderVector& ord) {
  const RaySet v = ord.vanishing();
  for (int c = 0; c < fan.num_cones(); ++c) {
    if (!v.subset_of(fan.cone(c))) continue;
    bool zero = true;
    for (int rho = 0; rho < fan.num_rays(); ++rho)
      if (!fan.cone(c).contains(rho) && ord[rho].value() != 0) zero = false;
    if (zero) return true;
  }
  return false;
}

}  // namespace toriq
