#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toriq/class_lattice.hpp"
#include "toriq/fan.hpp"

namespace toriq {

// Vanishing order: a finite integer or the infinity sentinel (zero section).
class Order {
 public:
  Order(std::int64_t v = 0) : v_(v) {}
  static Order infinity() {
    Order o;
    o.inf_ = true;
    return o;
  }
  bool is_inf() const { return inf_; }
  std::int64_t value() const;

  friend bool operator==(const Order& a, const Order& b) { return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_); }

 private:
  std::int64_t v_ = 0;
  bool inf_ = false;
};

std::string to_string(const Order& o);

struct OrderVector {
  std::vector<Order> orders;

  std::size_t size() const { return orders.size(); }
  const Order& operator[](int rho) const { return orders.at(static_cast<std::size_t>(rho)); }
  RaySet vanishing() const;  // rays with infinite order
  friend bool operator==(const OrderVector&, const OrderVector&) = default;
};

// "0,1,inf,0"; negative entries are rejected.
OrderVector parse_orders(std::string_view text);
std::string to_string(const OrderVector& ord);

struct PointDegree {
  CurveClass beta;
  std::vector<int> witnesses;  // maximal cone indices, increasing
};

// Scans every maximal cone containing the vanishing set.  Finite orders may
// be negative (used when normalizing rational section tuples).
PointDegree degree_at_point(const Fan& fan, const OrderVector& ord);

// l(x): min over cones containing V of the summed orders outside the cone.
std::int64_t length_at_point(const Fan& fan, const OrderVector& ord);
// The same minimum with each order replaced by beta.D_rho.  Not a function
// of l(x) in general: on Bl0P2 ord=(0,1,1,0) gives 0 here and l=1.
std::int64_t length_from_degree(const Fan& fan, const CurveClass& beta, const RaySet& vanishing);

// ord - beta, or nullopt if some finite entry becomes negative.
std::optional<OrderVector> twist_orders(const Fan& fan, const OrderVector& ord, const CurveClass& beta);

// Some maximal cone contains V and has zero order on every ray outside it.
bool is_non_basepoint(const Fan& fan, const OrderVector& ord);

}  // namespace toriq
