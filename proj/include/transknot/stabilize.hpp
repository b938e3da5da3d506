#pragma once

// Double-loop stabilization. A fixed polygonal detour is spliced into a host
// edge. For a host heading right the detour (vertices in `kDetour`) leaves
// the host line at (6,0), climbs along (1,1), runs a clockwise loop that
// recrosses the climb at (8,2), drops across the entry run at (9/2,0), passes
// underneath and rejoins the host line at (15,0). Its tangent stays between
// -225 and 45 degrees, so it never points up and adds no rotation.
//
// The crossing at (8,2) has "up" inside its tangent cone and is forced
// negative; the one at (9/2,0) is drawn negative. Each copy therefore lowers
// the writhe by 2 and leaves the knot type alone (a 2-crossing long knot is
// trivial).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/error.hpp"
#include "transknot/geometry.hpp"
#include "transknot/invariants.hpp"
#include "transknot/transversality.hpp"

namespace transknot {

namespace detail {

struct LocalPoint {
  int x;
  int z;
};

// Inserted after the host edge's start when the host heads right.
inline constexpr std::array<LocalPoint, 13> kDetour{{
    {6, 0}, {9, 3}, {10, 3}, {11, 2}, {10, 1}, {9, 1}, {7, 3},
    {6, 3}, {5, 2}, {4, -2}, {5, -3}, {12, -3}, {15, 0},
}};
inline const Point kDetourCenter{Rational(19, 2), Rational(0)};

// Variant for a host pointing straight down: leave the host at (0,0), run the
// same detour to the right, then return to the host line at (0,-20).
inline constexpr std::array<LocalPoint, 15> kDetourVertical{{
    {0, 0}, {6, 0}, {9, 3}, {10, 3}, {11, 2}, {10, 1}, {9, 1}, {7, 3},
    {6, 3}, {5, 2}, {4, -2}, {5, -3}, {12, -3}, {15, 0}, {0, -20},
}};
inline const Point kDetourVerticalCenter{Rational(0), Rational(-10)};

inline Point to_point(const LocalPoint& p) { return {Rational(p.x), Rational(p.z)}; }

/// Squared distance from `p` to the nearest edge other than `host`.
inline Rational clearance2(const PolyCurve& curve, EdgeRef host, const Point& p) {
  std::optional<Rational> best;
  for (std::size_t i = 1; i <= curve.size(); ++i) {
    if (i == host.index) continue;
    const EdgeRef e{i};
    Rational d = dist2_point_segment(p, curve.edge_start(e), curve.edge_end(e));
    if (!best || d < *best) best = d;
  }
  return *best;
}

/// Candidate anchor parameters along the host edge, midpoint first.
inline std::vector<Rational> anchor_parameters() {
  std::vector<Rational> out{Rational(1, 2)};
  for (int den = 3; den <= 12; ++den)
    for (int num = 1; num < den; ++num) {
      Rational t(num, den);
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
  return out;
}

/// One detour on a Plus-valid diagram.
inline TransverseDiagram stabilize_once(const TransverseDiagram& d, EdgeRef host) {
  const PolyCurve& curve = d.curve;
  const Point& start = curve.edge_start(host);
  const Direction h = curve.direction(host);
  const bool vertical = h.dx == 0;

  // Local-to-world linear part. For hx != 0 it sends (1,0) to h and fixes
  // the up ray, so every up-avoiding turn stays up-avoiding.
  auto linear = [&](const Direction& v) -> Direction {
    if (vertical) return v;
    const Rational abs_hx = h.dx > 0 ? h.dx : -h.dx;
    return {h.dx * v.dx, h.dz * v.dx + abs_hx * v.dz};
  };

  std::vector<Point> local;
  Point center;
  if (vertical) {
    for (const auto& p : kDetourVertical) local.push_back(to_point(p));
    center = kDetourVerticalCenter;
  } else {
    for (const auto& p : kDetour) local.push_back(to_point(p));
    center = kDetourCenter;
  }

  Rational reach2 = 0;
  for (const auto& p : local) {
    const Rational r = norm2(linear(p - center));
    if (r > reach2) reach2 = r;
  }

  for (const Rational& t : anchor_parameters()) {
    const Point anchor = start + t * h;
    const Rational clear2 = clearance2(curve, host, anchor);
    if (clear2 == 0) continue;
    // Fit the detour inside a quarter of the clearance radius.
    Rational scale = 1;
    int halvings = 0;
    while (scale * scale * reach2 > clear2 / 16) {
      scale /= 2;
      if (++halvings > 256) throw HostTooShort("stabilize: detour cannot be shrunk to fit");
    }

    std::vector<Point> vertices;
    vertices.reserve(curve.size() + local.size());
    for (std::size_t i = 1; i <= host.index; ++i) vertices.push_back(curve.vertex(i));
    for (const auto& p : local) vertices.push_back(anchor + scale * linear(p - center));
    for (std::size_t i = host.index + 1; i <= curve.size(); ++i)
      vertices.push_back(curve.vertex(i));
    PolyCurve out_curve(std::move(vertices));
    if (!check_genericity(out_curve).empty()) continue;

    const std::size_t inserted = local.size();
    auto old_edge = [&](EdgeRef e) -> std::optional<EdgeRef> {
      if (e.index < host.index) return e;
      if (e.index == host.index || e.index == host.index + inserted) return host;
      if (e.index > host.index + inserted) return EdgeRef{e.index - inserted};
      return std::nullopt;  // detour edge
    };
    std::map<Point, EdgeRef> old_over;
    for (const auto& c : d.crossings) old_over.emplace(c.point, c.over_edge());

    TransverseDiagram out{std::move(out_curve), Coorientation::Plus, {}};
    for (auto& raw : detect_crossings(out.curve)) {
      Crossing c{raw.lo, raw.hi, raw.point, Strand::Hi};
      auto it = old_over.find(raw.point);
      if (it != old_over.end() && old_edge(raw.lo) && old_edge(raw.hi)) {
        c.over = *old_edge(raw.lo) == it->second ? Strand::Lo : Strand::Hi;
      } else if (up_in_tangent_cone(out, c)) {
        c.over = forced_over(out, c);
      } else {
        c.over = Strand::Hi;
        if (crossing_sign(out, c) > 0) c.over = Strand::Lo;
      }
      out.crossings.push_back(std::move(c));
    }
    if (!validate(out).valid() || out.crossings.size() != d.crossings.size() + 2) continue;
    return out;
  }
  throw HostTooShort("stabilize: no admissible anchor on host edge e" +
                     std::to_string(host.index));
}

}  // namespace detail

/// Splices `count` double-loop detours into `host`, one after another toward
/// the host's end. Each copy adds two negative crossings.
inline TransverseDiagram stabilize(const TransverseDiagram& d, EdgeRef host, std::size_t count) {
  require_valid(d, "stabilize");
  if (host.index < 1 || host.index > d.curve.size())
    throw InvalidDiagram("stabilize: host edge out of range");
  if (count == 0) return d;

  const bool minus = d.coorientation == Coorientation::Minus;
  TransverseDiagram work = d;
  EdgeRef edge = host;
  if (minus) {
    work = reversed(d);
    work.coorientation = Coorientation::Plus;
    edge = reversed_edge(d.curve, host);
  }
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t before = work.curve.size();
    work = detail::stabilize_once(work, edge);
    edge = EdgeRef{edge.index + (work.curve.size() - before)};
  }
  if (minus) {
    work = reversed(work);
    work.coorientation = Coorientation::Minus;
  }
  return work;
}

}  // namespace transknot
