#pragma once

// Crossing signs, writhe, self-linking, the push-off linking oracle, and the
// order-2 invariant v2.
//
// Sign convention. The diagram lives in the (x, z) plane and a crossing's
// over strand is the one with the smaller y. Take tangents t1 = (a, 0, c)
// and t2 = (a', 0, c') and v the vector from the second strand to the first.
// If strand 1 is over it has the smaller y, so v = (0, -h, 0) with h > 0 and
//   det[t1, t2, v] = -h * det[[a, a'], [c, c']] * (-1) = h * (a c' - c a').
// Hence the resolution is positive exactly when cross(t_over, t_under) > 0,
// and the same expression does not depend on which strand is called first.
//
// Self-linking. The contact planes of ker(y dx - dz) all contain the y
// direction, so pushing K off along +y gives the natural framing. That
// push-off projects onto the diagram itself; every crossing of D produces two
// crossings of K with K' of the same sign, and lk(K, K') = w(D).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/error.hpp"
#include "transknot/geometry.hpp"
#include "transknot/transversality.hpp"

namespace transknot {

inline int crossing_sign(const TransverseDiagram& d, const Crossing& c) {
  return sign(cross(d.tangent(c.over_edge()), d.tangent(c.under_edge())));
}

inline int writhe(const TransverseDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += crossing_sign(d, c);
  return w;
}

inline void require_valid(const TransverseDiagram& d, const char* what) {
  const auto report = validate(d);
  if (!report.valid())
    throw InvalidDiagram(std::string(what) + ": " + format_violation(report.violations.front()));
}

/// The Bennequin number sl = w(D) of a valid diagram.
inline int self_linking(const TransverseDiagram& d) {
  require_valid(d, "self_linking");
  return writhe(d);
}

namespace detail {

/// Minimum squared feature separation: edge lengths, vertex to non-incident
/// edge distances, and distances between distinct crossing points.
inline Rational min_feature_separation2(const TransverseDiagram& d) {
  const PolyCurve& curve = d.curve;
  const std::size_t n = curve.size();
  std::optional<Rational> best;
  auto take = [&](const Rational& v) {
    if (!best || v < *best) best = v;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    const EdgeRef e{i};
    take(norm2(curve.direction(e)));
    for (std::size_t v = 1; v <= n; ++v) {
      if (v == i || v == curve.next(e).index) continue;
      take(dist2_point_segment(curve.vertex(v), curve.edge_start(e), curve.edge_end(e)));
    }
  }
  for (std::size_t a = 0; a < d.crossings.size(); ++a)
    for (std::size_t b = a + 1; b < d.crossings.size(); ++b)
      take(norm2(d.crossings[a].point - d.crossings[b].point));
  return *best;
}

enum class Contact { None, Proper, Degenerate };

inline Contact contact(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  const int o1 = orient(a1, a2, b1), o2 = orient(a1, a2, b2);
  const int o3 = orient(b1, b2, a1), o4 = orient(b1, b2, a2);
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return (o1 != o2 && o3 != o4) ? Contact::Proper : Contact::None;
  const bool touch = on_closed_segment(b1, a1, a2) || on_closed_segment(b2, a1, a2) ||
                     on_closed_segment(a1, b1, b2) || on_closed_segment(a2, b1, b2);
  return touch ? Contact::Degenerate : Contact::None;
}

}  // namespace detail

/// Offset direction (1, 1 + k) for the smallest k >= 0 not parallel to any edge.
inline Direction pushoff_direction(const PolyCurve& curve) {
  for (long k = 0;; ++k) {
    const Direction dir{Rational(1), Rational(1 + k)};
    bool clash = false;
    for (std::size_t i = 1; i <= curve.size() && !clash; ++i)
      clash = parallel(curve.direction(EdgeRef{i}), dir);
    if (!clash) return dir;
  }
}

/// Linking number of K with its +y push-off, computed from the planar
/// diagram of K and K' = K + delta (a small generic in-plane shift).
///
/// Near each crossing of D the pair (lo, hi') and (hi, lo') meet once each
/// and inherit the crossing's height order. The remaining contacts are
/// between an edge and the shifted copy of an adjacent edge, near corners
/// where the tangent sweeps past +-delta; there K' sits at larger y and so
/// passes under K. Any other contact means delta was too large, and the shift
/// is halved and retried.
inline int pushoff_linking_oracle(const TransverseDiagram& d) {
  require_valid(d, "pushoff_linking_oracle");
  const PolyCurve& curve = d.curve;
  const std::size_t n = curve.size();
  const Direction dir = pushoff_direction(curve);
  const Rational limit2 = detail::min_feature_separation2(d) / 16;

  Rational scale = 1;
  while (scale * scale * norm2(dir) > limit2) scale /= 2;

  std::vector<std::vector<const Crossing*>> crossing_of(n + 1, std::vector<const Crossing*>(n + 1));
  for (const auto& c : d.crossings) {
    crossing_of[c.lo.index][c.hi.index] = &c;
    crossing_of[c.hi.index][c.lo.index] = &c;
  }

  for (int attempt = 0; attempt < 40; ++attempt, scale /= 2) {
    const Direction delta = scale * dir;
    std::vector<std::size_t> hits_per_crossing(d.crossings.size(), 0);
    int total = 0;
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      const EdgeRef e{i};
      const Point& a1 = curve.edge_start(e);
      const Point& a2 = curve.edge_end(e);
      for (std::size_t j = 1; j <= n && ok; ++j) {
        const EdgeRef f{j};
        const Point b1 = curve.edge_start(f) + delta;
        const Point b2 = curve.edge_end(f) + delta;
        const auto kind = detail::contact(a1, a2, b1, b2);
        if (kind == detail::Contact::None) continue;
        if (kind == detail::Contact::Degenerate) {
          ok = false;
          break;
        }
        const Direction t_k = curve.direction(e);
        const Direction t_kp = curve.direction(f);
        if (const Crossing* c = crossing_of[i][j]) {
          ++hits_per_crossing[static_cast<std::size_t>(c - d.crossings.data())];
          const bool k_over = c->over_edge() == e;
          total += k_over ? sign(cross(t_k, t_kp)) : sign(cross(t_kp, t_k));
        } else if (curve.adjacent(e, f)) {
          total += sign(cross(t_k, t_kp));
        } else {
          ok = false;
        }
      }
    }
    if (ok)
      ok = std::all_of(hits_per_crossing.begin(), hits_per_crossing.end(),
                       [](std::size_t h) { return h == 2; });
    if (!ok) continue;
    if (total % 2 != 0) throw OracleFailure("pushoff_linking_oracle: odd signed sum");
    return total / 2;
  }
  throw OracleFailure("pushoff_linking_oracle: no admissible offset found");
}

/// One pass through a crossing while walking the curve.
struct GaussEntry {
  std::size_t crossing;  // index into d.crossings
  bool over;
};

/// Gauss sequence of the diagram starting at vertex `base` (1-based).
inline std::vector<GaussEntry> gauss_sequence(const TransverseDiagram& d, std::size_t base) {
  const PolyCurve& curve = d.curve;
  const std::size_t n = curve.size();
  std::vector<std::vector<std::size_t>> on_edge(n + 1);
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    on_edge[d.crossings[k].lo.index].push_back(k);
    on_edge[d.crossings[k].hi.index].push_back(k);
  }
  std::vector<GaussEntry> out;
  for (std::size_t step = 0; step < n; ++step) {
    const EdgeRef e{(base - 1 + step) % n + 1};
    const Point& start = curve.edge_start(e);
    const Direction dir = curve.direction(e);
    auto ids = on_edge[e.index];
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return dot(d.crossings[a].point - start, dir) < dot(d.crossings[b].point - start, dir);
    });
    for (std::size_t k : ids) out.push_back({k, d.crossings[k].over_edge() == e});
  }
  return out;
}

/// Lexicographically smallest vertex, the default base point for v2.
inline std::size_t default_basepoint(const PolyCurve& curve) {
  const auto& vs = curve.vertices();
  return static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin()) + 1;
}

/// Casson invariant from a based Gauss diagram: the signed count of crossing
/// pairs (c1, c2) met in the order c1, c2, c1, c2 from the base point, with
/// c1 first passed as an underpass and c2 first passed as an overpass.
inline int v2_at_basepoint(const TransverseDiagram& d, std::size_t base) {
  const auto seq = gauss_sequence(d, base);
  const std::size_t m = d.crossings.size();
  std::vector<std::size_t> first(m, seq.size()), second(m, seq.size());
  std::vector<bool> first_over(m, false);
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    const auto& g = seq[pos];
    if (first[g.crossing] == seq.size()) {
      first[g.crossing] = pos;
      first_over[g.crossing] = g.over;
    } else {
      second[g.crossing] = pos;
    }
  }
  std::vector<int> signs(m);
  for (std::size_t k = 0; k < m; ++k) signs[k] = crossing_sign(d, d.crossings[k]);

  int total = 0;
  for (std::size_t c1 = 0; c1 < m; ++c1) {
    if (first_over[c1]) continue;
    for (std::size_t c2 = 0; c2 < m; ++c2) {
      if (c2 == c1 || !first_over[c2]) continue;
      if (first[c1] < first[c2] && first[c2] < second[c1] && second[c1] < second[c2])
        total += signs[c1] * signs[c2];
    }
  }
  return total;
}

inline int v2(const TransverseDiagram& d) { return v2_at_basepoint(d, default_basepoint(d.curve)); }

}  // namespace transknot
