#pragma once

#include <vector>

#include "toriq/quasimap.hpp"

namespace toriq {

// Maximal unmarked subtree meeting the rest of the curve in one node.  The
// core is the smallest subtree containing every marked component (component
// 0 when there are no markings).
struct RationalTail {
  std::vector<int> components;  // increasing
  CurvePoint attach;            // the node branch on the core
  CurvePoint foot;              // the node branch on the tail
  CurveClass beta;              // total degree of the tail
};

std::vector<int> core_components(const Quasimap& f);
std::vector<RationalTail> rational_tails(const Quasimap& f);

// A map is a valid quasimap without basepoints.
bool is_map(const Quasimap& f);
void require_map(const Quasimap& f);  // throws std::invalid_argument

struct TailCheck {
  RationalTail tail;
  std::vector<int> failing_rays;  // rays with ord_x(s_rho|core) + beta_T.D_rho < 0
  bool ok() const { return failing_rays.empty(); }
};

struct ContractionReport {
  std::vector<TailCheck> tails;
  bool ok() const;
};

ContractionReport contraction_condition(const Quasimap& f);

// Drops the tails and twists the core at each attaching point by beta_T.
// Components of the core keep their relative order.  Throws
// std::domain_error when the condition fails.
Quasimap contract(const Quasimap& f);

// Grafts a tail carrying the given sections at a rational basepoint.  The
// old curve is extended at that point only; tail_sections must have degrees
// beta_x.D_rho and match the extended value at the point.  The tail becomes
// the last component.  Throws std::invalid_argument on bad input.
Quasimap graft(const Quasimap& q, const CurvePoint& at, const Component& tail, const ProjPoint& attach);

// Tail sections for grafting at a basepoint, attached at [1:0].  Negative
// degrees give zero, degree 0 the extended value, positive degrees v times
// simple linear factors vanishing at next_zero, next_zero+1, ... (or z times
// such factors when v = 0).  next_zero is advanced past the zeros used.
Component default_tail(const Quasimap& q, const CurvePoint& at, int& next_zero);

// Removes an unmarked leaf and twists its neighbour at the node by the
// leaf's degree.  Throws std::invalid_argument for a marked or inner
// component, std::domain_error if the twist is not exact.
Quasimap prune(const Quasimap& q, int component);

// Deletes degree zero components with fewer than three special points,
// reconnecting across those with two.  Only components outside the core are
// touched.
Quasimap stabilize_map(const Quasimap& f);

// A stable map contracting to q, found by repeated grafting at basepoints.
// Requires rational basepoints, a quasimap-stable q and a target that is
// Fano or satisfies the relaxed surjectivity condition.
Quasimap surjectivity_witness(const Quasimap& q);

}  // namespace toriq
