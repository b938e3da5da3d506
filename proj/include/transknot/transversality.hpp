#pragma once

// Validity of a diagram as a transverse knot diagram in (R^3, ker(y dx - dz)).
//
// Condition 1: the projected curve has no tangent pointing straight up.
// Condition 2: at a crossing whose tangent cone contains "up", the strand
// heading to the upper right passes under the one heading to the upper left.
// Minus-cooriented diagrams are checked with every strand reversed, which on
// the original curve is the same as testing against "down".

#include <cassert>
#include <cstddef>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/geometry.hpp"

namespace transknot {

struct ValidityReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// The forbidden tangent direction for a coorientation, expressed on the
/// curve as drawn.
inline const Direction& forbidden_direction(Coorientation coor) {
  return coor == Coorientation::Plus ? kUp : kDown;
}

inline std::vector<Violation> check_condition1(const PolyCurve& curve, Coorientation coor) {
  const Direction& u = forbidden_direction(coor);
  std::vector<Violation> out;
  for (std::size_t i = 1; i <= curve.size(); ++i) {
    const EdgeRef e{i};
    const Direction d = curve.direction(e);
    if (same_ray(d, u)) out.push_back({ViolationKind::UpwardEdge, e, {}});
    const EdgeRef f = curve.next(e);
    if (corner_sweep_contains(d, curve.direction(f), u))
      out.push_back({ViolationKind::UpwardCorner, EdgePair{e, f}, {}});
  }
  return out;
}

/// Tangent of edge `e` as seen by the checks: reversed for Minus.
inline Direction effective_tangent(const TransverseDiagram& d, EdgeRef e) {
  Direction t = d.tangent(e);
  return d.coorientation == Coorientation::Plus ? t : -t;
}

/// Whether "up" lies in the open cone of the (effective) tangents at c.
inline bool up_in_tangent_cone(const TransverseDiagram& d, const Crossing& c) {
  return in_open_cone(kUp, effective_tangent(d, c.lo), effective_tangent(d, c.hi));
}

/// For a cone crossing, the strand that must be drawn on top: the one whose
/// effective tangent points to the upper left.
inline Strand forced_over(const TransverseDiagram& d, const Crossing& c) {
  const Direction t_lo = effective_tangent(d, c.lo);
  const Direction t_hi = effective_tangent(d, c.hi);
  assert((t_lo.dx > 0) != (t_hi.dx > 0));
  return t_lo.dx < 0 ? Strand::Lo : Strand::Hi;
}

inline std::vector<Violation> check_condition2(const TransverseDiagram& d) {
  std::vector<Violation> out;
  for (const auto& c : d.crossings) {
    if (!up_in_tangent_cone(d, c)) continue;
    if (c.over != forced_over(d, c))
      out.push_back({ViolationKind::ForbiddenCrossing, c.point, {}});
  }
  return out;
}

/// Genericity, crossing-list consistency, then conditions 1 and 2.
inline ValidityReport validate(const TransverseDiagram& d) {
  ValidityReport report;
  report.violations = check_genericity(d.curve);
  if (!report.valid()) return report;

  std::vector<EdgePair> declared;
  for (const auto& c : d.crossings) declared.push_back({c.lo, c.hi});
  report.violations = crossing_mismatches(d.curve, declared);
  if (!report.valid()) return report;

  report.violations = check_condition1(d.curve, d.coorientation);
  auto cond2 = check_condition2(d);
  report.violations.insert(report.violations.end(), cond2.begin(), cond2.end());
  return report;
}

/// Rotation number of the tangent, counted as signed corner sweeps across
/// the reference ray `r`. `r` must not be the direction of any edge.
inline int whitney_index(const PolyCurve& curve, const Direction& r) {
  int total = 0;
  for (std::size_t i = 1; i <= curve.size(); ++i) {
    const EdgeRef e{i};
    const Direction d_in = curve.direction(e);
    const Direction d_out = curve.direction(curve.next(e));
    assert(!same_ray(d_in, r));
    if (corner_sweep_contains(d_in, d_out, r)) total += cross(d_in, d_out) > 0 ? 1 : -1;
  }
  return total;
}

/// Default reference: straight up, or the first (1, N), N = 1, 2, ...,
/// that avoids every edge direction when some edge is vertical.
inline Direction whitney_reference(const PolyCurve& curve) {
  bool has_vertical = false;
  for (std::size_t i = 1; i <= curve.size(); ++i)
    if (curve.direction(EdgeRef{i}).dx == 0) has_vertical = true;
  if (!has_vertical) return kUp;
  for (long n = 1;; ++n) {
    const Direction r{Rational(1), Rational(n)};
    bool clash = false;
    for (std::size_t i = 1; i <= curve.size() && !clash; ++i)
      clash = same_ray(curve.direction(EdgeRef{i}), r);
    if (!clash) return r;
  }
}

inline int whitney_index(const PolyCurve& curve) {
  return whitney_index(curve, whitney_reference(curve));
}

}  // namespace transknot
