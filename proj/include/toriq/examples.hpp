#pragma once

#include <string>
#include <vector>

#include "toriq/quasimap.hpp"

namespace toriq::examples {

// Bl0P2 basepoint table: order vector, witnessing cones (indices into
// s13, s23, s02, s01) and degree, as printed in the reference table.
struct TableRow {
  std::string orders;
  std::vector<int> witnesses;
  IntVec beta;
};
std::vector<TableRow> table1();

// [x0:x1] -> [0:0:x0] on P^2, with optional markings.
Quasimap p2_line(const std::vector<ProjPoint>& marks = {});

// Two quasimaps to P1xP1 of degree (2,2) with the same image in P^3.
Quasimap segre_q1();
Quasimap segre_q2();

// Two-component stable map to Bl0P2 of class 2L: degree 2S on the marked
// component, 2E on the tail, with s3 = x1^2 - t x1 x0 on the marked one.
Quasimap family_map(const Rational& t);
// Expected contraction at t = 0: [x0^2 : 0 : 2 x1^2 : 1], basepoint 2E at [1:0].
Quasimap family_contracted();

}  // namespace toriq::examples
