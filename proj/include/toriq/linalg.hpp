#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toriq/rational.hpp"

namespace toriq {

using RatMatrix = std::vector<RatVec>;  // row major
using IntMatrix = std::vector<IntVec>;

RatMatrix to_rational(const IntMatrix& m);

Rational determinant(RatMatrix m);
std::size_t rank(RatMatrix m);

// Inverse of a square matrix, or nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Unique solution of A x = b for square nonsingular A.
std::optional<RatVec> solve_square(const RatMatrix& a, const RatVec& b);

// Basis of the right kernel {x : A x = 0}.
std::vector<RatVec> kernel(const RatMatrix& a, std::size_t cols);

// Vertices of the polytope {x : A x >= b}.  The polytope is assumed bounded
// (callers add box constraints otherwise).  Brute force over tight subsets, so
// only for the small dimensions this library works in.
std::vector<RatVec> polytope_vertices(const RatMatrix& a, const RatVec& b);

// Integer points of a bounded polytope {x : A x >= b}.
std::vector<IntVec> polytope_lattice_points(const RatMatrix& a, const RatVec& b);

// Extreme rays of the pointed cone {x : A x >= 0} in dimension cols,
// scaled to primitive integer vectors.
std::vector<IntVec> cone_extreme_rays(const IntMatrix& a, std::size_t cols);

// Nonzero invariant factors of an integer matrix.
std::vector<Integer> smith_invariants(const IntMatrix& m);

IntVec primitive_integer(const RatVec& v);

}  // namespace toriq
