#pragma once

// Seeded generation of valid diagrams and singular families.
//
// Seed s drives std::mt19937_64(s); a draw below n is `engine() % n`. A
// diagram is a closed random walk over kWalkDirections, a table of integer
// directions listed clockwise from just right of "up" to just left of it.
// Consecutive steps move at most `max_turn` slots along the table. Walks
// that are not generic or whose corners (the closing ones included) sweep
// through "up" are rejected and redrawn. Cone crossings get their forced
// over strand, all others a random one.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/error.hpp"
#include "transknot/singular.hpp"
#include "transknot/transversality.hpp"

namespace transknot {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish draw in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::array<std::array<int, 2>, 23> kWalkDirections{{
    {1, 3},   {1, 2},   {1, 1},   {2, 1},   {3, 1},   {1, 0},   {3, -1},  {2, -1},
    {1, -1},  {1, -2},  {1, -3},  {0, -1},  {-1, -3}, {-1, -2}, {-1, -1}, {-2, -1},
    {-3, -1}, {-1, 0},  {-3, 1},  {-2, 1},  {-1, 1},  {-1, 2},  {-1, 3},
}};

struct RandomDiagramOptions {
  std::size_t min_edges = 16;
  std::size_t max_edges = 32;
  std::size_t max_crossings = 16;
  std::size_t min_admissible = 0;  // admissible double-point sites required
  long max_turn = 10;              // largest slot change between consecutive edges
  std::uint64_t max_length = 5;    // step lengths are 1..max_length
};

inline TransverseDiagram random_valid_diagram(SeededRng& rng,
                                              const RandomDiagramOptions& opts = {}) {
  const std::size_t table = kWalkDirections.size();
  for (;;) {
    const std::size_t edges = opts.min_edges + rng.below(opts.max_edges - opts.min_edges + 1);
    std::size_t slot = rng.below(table);
    std::vector<Point> vertices;
    Point p{Rational(0), Rational(0)};
    vertices.push_back(p);
    for (std::size_t k = 0; k + 1 < edges; ++k) {
      const auto& dir = kWalkDirections[slot];
      const long len = 1 + static_cast<long>(rng.below(opts.max_length));
      p = p + Direction{Rational(len * dir[0]), Rational(len * dir[1])};
      vertices.push_back(p);
      long step = static_cast<long>(rng.below(2 * opts.max_turn)) - opts.max_turn;
      if (step >= 0) ++step;  // nonzero, |step| <= max_turn
      long next = static_cast<long>(slot) + step;
      if (next < 0) next = -next;
      if (next >= static_cast<long>(table)) next = 2 * (static_cast<long>(table) - 1) - next;
      slot = static_cast<std::size_t>(next);
    }
    PolyCurve curve(std::move(vertices));
    // Condition 1 is linear-time, so it runs first; it throws on a
    // reversal corner, which genericity would reject anyway.
    try {
      if (!check_condition1(curve, Coorientation::Plus).empty()) continue;
    } catch (const ReversalError&) {
      continue;
    }
    if (!check_genericity(curve).empty()) continue;

    TransverseDiagram d{curve, Coorientation::Plus, {}};
    for (auto& raw : detect_crossings(d.curve)) {
      Crossing c{raw.lo, raw.hi, raw.point, Strand::Hi};
      c.over = up_in_tangent_cone(d, c) ? forced_over(d, c) : (rng.coin() ? Strand::Lo : Strand::Hi);
      d.crossings.push_back(std::move(c));
    }
    if (d.crossings.size() > opts.max_crossings) continue;
    if (admissible_sites(d).size() < opts.min_admissible) continue;
    return d;
  }
}

/// `count` diagrams from one seed.
inline std::vector<TransverseDiagram> random_valid_diagrams(std::uint64_t seed, std::size_t count,
                                                            const RandomDiagramOptions& opts = {}) {
  SeededRng rng(seed);
  std::vector<TransverseDiagram> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_valid_diagram(rng, opts));
  return out;
}

/// `samples` singular diagrams with exactly `double_points` admissible double
/// points each, drawn from random valid diagrams.
inline std::vector<SingularDiagram> singular_family(std::uint64_t seed, std::size_t double_points,
                                                    std::size_t samples) {
  SeededRng rng(seed);
  RandomDiagramOptions opts;
  opts.min_admissible = double_points;
  std::vector<SingularDiagram> out;
  for (std::size_t k = 0; k < samples; ++k) {
    const TransverseDiagram d = random_valid_diagram(rng, opts);
    auto pool = admissible_sites(d);
    std::set<std::size_t> chosen;
    while (chosen.size() < double_points) {
      const std::size_t pick = rng.below(pool.size());
      chosen.insert(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    out.push_back(make_singular(d, chosen));
  }
  return out;
}

}  // namespace transknot
