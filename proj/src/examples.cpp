#include "toriq/examples.hpp"

#include "toriq/catalog.hpp"

namespace toriq::examples {

namespace {

BinaryForm form(int degree, std::initializer_list<const char*> coeffs) {
  RatVec c;
  for (const char* s : coeffs) c.push_back(parse_rational(s));
  return BinaryForm::from_coeffs(degree, c);
}

Quasimap single(FanPtr fan, std::vector<BinaryForm> s, const std::vector<ProjPoint>& marks = {}) {
  Quasimap q;
  q.fan = std::move(fan);
  q.components.push_back(Component{std::move(s)});
  for (const auto& m : marks) q.markings.push_back(CurvePoint{0, m});
  return q;
}

}  // namespace

std::vector<TableRow> table1() {
  const IntVec E{0, 1, 1, -1}, S{1, 0, 0, 1}, L{1, 1, 1, 0};
  return {
      {"0,1,1,0", {0, 1}, E},         {"0,1,1,inf", {0, 1}, E},   {"0,1,inf,0", {1}, E},
      {"0,1,inf,inf", {1}, E},        {"1,0,0,inf", {0}, S},      {"1,0,1,inf", {1}, S},
      {"1,0,inf,1", {1, 2}, S},       {"1,1,1,0", {0, 1, 2, 3}, L}, {"1,1,1,inf", {0, 1}, L},
      {"1,1,inf,0", {1, 2}, L},       {"1,1,inf,inf", {1}, L},    {"inf,0,inf,1", {2}, S},
      {"inf,1,1,0", {2, 3}, L},       {"inf,1,inf,0", {2}, L},
  };
}

Quasimap p2_line(const std::vector<ProjPoint>& marks) {
  return single(catalog::projective_space(2), {BinaryForm::zero(1), BinaryForm::zero(1), form(1, {"1", "0"})}, marks);
}

Quasimap segre_q1() {
  return single(catalog::p1xp1(), {form(2, {"1", "0", "0"}), form(2, {"0", "1", "0"}), form(2, {"0", "1", "0"}),
                                   form(2, {"0", "0", "1"})});
}

Quasimap segre_q2() {
  return single(catalog::p1xp1(), {form(2, {"0", "1", "0"}), form(2, {"0", "0", "1"}), form(2, {"1", "0", "0"}),
                                   form(2, {"0", "1", "0"})});
}

Quasimap family_map(const Rational& t) {
  Quasimap q;
  q.fan = catalog::bl0p2();
  Rational mt = -t;
  q.components.push_back(Component{{form(2, {"1", "0", "0"}), BinaryForm::zero(0), form(0, {"2"}),
                                    BinaryForm::from_coeffs(2, {Rational(0), mt, Rational(1)})}});
  // s0 = y0^2 on a bundle of degree 0 is stored as the constant 1
  q.components.push_back(Component{{form(0, {"1"}), form(2, {"0", "1", "0"}), form(2, {"2", "-3", "1"}),
                                    BinaryForm::zero(-2)}});
  q.nodes.push_back(Node{CurvePoint{0, ProjPoint::affine(Rational(0))}, CurvePoint{1, ProjPoint::affine(Rational(0))}});
  q.markings = {CurvePoint{0, ProjPoint::infinity()}, CurvePoint{0, ProjPoint::affine(Rational(1))}};
  return q;
}

Quasimap family_contracted() {
  Quasimap q;
  q.fan = catalog::bl0p2();
  q.components.push_back(Component{{form(2, {"1", "0", "0"}), BinaryForm::zero(2), form(2, {"0", "0", "2"}), form(0, {"1"})}});
  q.markings = {CurvePoint{0, ProjPoint::infinity()}, CurvePoint{0, ProjPoint::affine(Rational(1))}};
  return q;
}

}  // namespace toriq::examples
