#pragma once

#include <string>
#include <vector>

#include "toriq/fan.hpp"

namespace toriq::catalog {

// P^n with rays -(e_1+..+e_n), e_1, .., e_n and cones omitting one ray.
FanPtr projective_space(int n);

// Product fan; rays of a first, then rays of b.
FanPtr product(const Fan& a, const Fan& b);
FanPtr product_of_projective_spaces(const std::vector<int>& dims);

// P^1 x P^1 with rays e1, -e1, e2, -e2.
FanPtr p1xp1();

// Blow-up of P^2 at a fixed point; rays (0,-1), (1,0), (-1,1), (0,1).
FanPtr bl0p2();

// Complete 2-dimensional fan with consecutive rays spanning the cones.
FanPtr polygon(const std::vector<IntVec>& rays_ccw, std::string name = {});

// Hirzebruch surface F_a with rays (1,0), (0,1), (-1,a), (0,-1).
FanPtr hirzebruch(int a);

// Del Pezzo surfaces of degree 7 and 6 (toric blow-ups of P^2).
FanPtr dp7();
FanPtr dp6();

// "Pn", "P1xP1", "Bl0P2", "Fa", "dP7", "dP6", or products "PaxPbx..." of
// projective spaces; nullptr for unknown names.
FanPtr by_name(const std::string& name);

}  // namespace toriq::catalog
