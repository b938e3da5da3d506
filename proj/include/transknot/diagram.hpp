#pragma once

// Polygonal diagrams in the (x, z) plane: the data model, crossing detection,
// genericity checks and the `transverse-diagram/1` text format.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "transknot/error.hpp"
#include "transknot/geometry.hpp"

namespace transknot {

/// 1-based edge index; edge i runs from vertex i to vertex i+1 (cyclically).
struct EdgeRef {
  std::size_t index = 0;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct EdgePair {
  EdgeRef first;
  EdgeRef second;
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

class PolyCurve {
 public:
  PolyCurve() = default;
  explicit PolyCurve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// 1-based vertex access, cyclic.
  const Point& vertex(std::size_t i) const { return vertices_[(i - 1) % vertices_.size()]; }
  const Point& edge_start(EdgeRef e) const { return vertex(e.index); }
  const Point& edge_end(EdgeRef e) const { return vertex(e.index + 1); }
  Direction direction(EdgeRef e) const { return edge_end(e) - edge_start(e); }

  EdgeRef next(EdgeRef e) const { return {e.index % size() + 1}; }
  EdgeRef prev(EdgeRef e) const { return {e.index == 1 ? size() : e.index - 1}; }

  bool adjacent(EdgeRef a, EdgeRef b) const {
    return a == b || next(a) == b || next(b) == a;
  }

  friend bool operator==(const PolyCurve&, const PolyCurve&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Same curve traversed backwards, keeping vertex 1 first. Edge i maps to
/// edge n + 1 - i.
inline PolyCurve reversed(const PolyCurve& curve) {
  std::vector<Point> out;
  out.reserve(curve.size());
  out.push_back(curve.vertices().front());
  for (std::size_t i = curve.size(); i >= 2; --i) out.push_back(curve.vertex(i));
  return PolyCurve(std::move(out));
}

inline EdgeRef reversed_edge(const PolyCurve& curve, EdgeRef e) {
  return {curve.size() + 1 - e.index};
}

enum class Strand { Lo, Hi };
enum class Coorientation { Plus, Minus };

inline Strand other(Strand s) { return s == Strand::Lo ? Strand::Hi : Strand::Lo; }

/// A crossing between non-adjacent edges lo < hi. `over` names the strand
/// drawn on top, i.e. the one with the smaller y-coordinate.
struct Crossing {
  EdgeRef lo;
  EdgeRef hi;
  Point point;
  Strand over = Strand::Hi;

  EdgeRef over_edge() const { return over == Strand::Lo ? lo : hi; }
  EdgeRef under_edge() const { return over == Strand::Lo ? hi : lo; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A geometric intersection before over/under data is attached.
struct RawCrossing {
  EdgeRef lo;
  EdgeRef hi;
  Point point;
  friend bool operator==(const RawCrossing&, const RawCrossing&) = default;
};

struct TransverseDiagram {
  PolyCurve curve;
  Coorientation coorientation = Coorientation::Plus;
  std::vector<Crossing> crossings;  // sorted by (lo, hi)

  Direction tangent(EdgeRef e) const { return curve.direction(e); }
  friend bool operator==(const TransverseDiagram&, const TransverseDiagram&) = default;
};

enum class ViolationKind {
  ZeroEdge,
  ReversalCorner,
  EndpointContact,
  CollinearOverlap,
  TriplePoint,
  VertexOnEdge,
  UpwardEdge,
  UpwardCorner,
  ForbiddenCrossing,
  CrossingMismatch,
};

inline std::string_view kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ZeroEdge: return "ZeroEdge";
    case ViolationKind::ReversalCorner: return "ReversalCorner";
    case ViolationKind::EndpointContact: return "EndpointContact";
    case ViolationKind::CollinearOverlap: return "CollinearOverlap";
    case ViolationKind::TriplePoint: return "TriplePoint";
    case ViolationKind::VertexOnEdge: return "VertexOnEdge";
    case ViolationKind::UpwardEdge: return "UpwardEdge";
    case ViolationKind::UpwardCorner: return "UpwardCorner";
    case ViolationKind::ForbiddenCrossing: return "ForbiddenCrossing";
    case ViolationKind::CrossingMismatch: return "CrossingMismatch";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::variant<EdgeRef, EdgePair, Point> location;
  std::string detail;  // free text, e.g. "missing" / "extra" for CrossingMismatch

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string format_location(const Violation& v) {
  std::ostringstream os;
  if (const auto* e = std::get_if<EdgeRef>(&v.location)) {
    os << "e" << e->index;
  } else if (const auto* p = std::get_if<EdgePair>(&v.location)) {
    os << "e" << p->first.index << ",e" << p->second.index;
  } else {
    os << std::get<Point>(v.location);
  }
  return os.str();
}

/// `<kind> <location>[ <detail>]`
inline std::string format_violation(const Violation& v) {
  std::string out = std::string(kind_name(v.kind)) + " " + format_location(v);
  if (!v.detail.empty()) out += " " + v.detail;
  return out;
}

inline bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

namespace detail {

/// Closed bounding boxes of [a1, a2] and [b1, b2] do not meet.
inline bool boxes_disjoint(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  const auto& [ax_lo, ax_hi] = std::minmax(a1.x, a2.x);
  const auto& [bx_lo, bx_hi] = std::minmax(b1.x, b2.x);
  if (ax_hi < bx_lo || bx_hi < ax_lo) return true;
  const auto& [az_lo, az_hi] = std::minmax(a1.z, a2.z);
  const auto& [bz_lo, bz_hi] = std::minmax(b1.z, b2.z);
  return az_hi < bz_lo || bz_hi < az_lo;
}

inline bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, p - b) <= 0;
}

/// Positive-length overlap of two collinear segments.
inline bool collinear_overlap(const Point& a1, const Point& a2, const Point& b1,
                              const Point& b2) {
  const Direction d = a2 - a1;
  auto param = [&](const Point& p) { return dot(p - a1, d); };
  Rational lo_a = 0, hi_a = norm2(d);
  Rational lo_b = param(b1), hi_b = param(b2);
  if (lo_b > hi_b) std::swap(lo_b, hi_b);
  return std::min(hi_a, hi_b) > std::max(lo_a, lo_b);
}

}  // namespace detail

/// All open-interior transversal intersections of non-adjacent edge pairs,
/// sorted by (lo, hi). Assumes a generic curve.
inline std::vector<RawCrossing> detect_crossings(const PolyCurve& curve) {
  std::vector<RawCrossing> out;
  const std::size_t n = curve.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const EdgeRef a{i}, b{j};
      if (curve.adjacent(a, b)) continue;
      if (detail::boxes_disjoint(curve.edge_start(a), curve.edge_end(a), curve.edge_start(b),
                                 curve.edge_end(b)))
        continue;
      if (auto p = segment_intersection(curve.edge_start(a), curve.edge_end(a),
                                        curve.edge_start(b), curve.edge_end(b)))
        out.push_back({a, b, std::move(*p)});
    }
  }
  return out;
}

/// Empty iff the curve is a generic closed polygon: no zero edges, no
/// reversal corners, and non-adjacent edges meet only in distinct
/// transversal interior points.
inline std::vector<Violation> check_genericity(const PolyCurve& curve) {
  std::vector<Violation> out;
  const std::size_t n = curve.size();
  if (n < 3) {
    out.push_back({ViolationKind::ZeroEdge, EdgeRef{1}, "fewer than 3 vertices"});
    return out;
  }
  std::vector<bool> zero(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    if (curve.direction(EdgeRef{i}).is_zero()) {
      zero[i] = true;
      out.push_back({ViolationKind::ZeroEdge, EdgeRef{i}, {}});
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const EdgeRef a{i};
    const EdgeRef b = curve.next(a);
    if (zero[a.index] || zero[b.index]) continue;
    const Direction da = curve.direction(a), db = curve.direction(b);
    if (cross(da, db) == 0 && dot(da, db) < 0)
      out.push_back({ViolationKind::ReversalCorner, EdgePair{a, b}, {}});
  }

  std::vector<Point> crossing_points;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const EdgeRef a{i}, b{j};
      if (zero[i] || zero[j]) continue;
      const Point &a1 = curve.edge_start(a), &a2 = curve.edge_end(a);
      const Point &b1 = curve.edge_start(b), &b2 = curve.edge_end(b);
      if (detail::boxes_disjoint(a1, a2, b1, b2)) continue;
      const bool collinear = orient(a1, a2, b1) == 0 && orient(a1, a2, b2) == 0;
      if (collinear && detail::collinear_overlap(a1, a2, b1, b2)) {
        out.push_back({ViolationKind::CollinearOverlap, EdgePair{a, b}, {}});
        continue;
      }
      if (curve.adjacent(a, b)) continue;
      const bool shared = a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
      if (shared) {
        out.push_back({ViolationKind::EndpointContact, EdgePair{a, b}, {}});
        continue;
      }
      const bool touches = detail::on_closed_segment(b1, a1, a2) ||
                           detail::on_closed_segment(b2, a1, a2) ||
                           detail::on_closed_segment(a1, b1, b2) ||
                           detail::on_closed_segment(a2, b1, b2);
      if (touches) {
        out.push_back({ViolationKind::VertexOnEdge, EdgePair{a, b}, {}});
        continue;
      }
      if (auto p = segment_intersection(a1, a2, b1, b2)) crossing_points.push_back(*p);
    }
  }
  std::sort(crossing_points.begin(), crossing_points.end());
  for (std::size_t k = 1; k < crossing_points.size(); ++k) {
    if (crossing_points[k] == crossing_points[k - 1] &&
        (k < 2 || crossing_points[k - 2] != crossing_points[k]))
      out.push_back({ViolationKind::TriplePoint, crossing_points[k], {}});
  }
  return out;
}

/// Attaches over/under data to the detected crossings of a generic curve.
inline TransverseDiagram make_diagram(
    PolyCurve curve, Coorientation coorientation,
    const std::function<Strand(const RawCrossing&)>& choose_over) {
  TransverseDiagram d{std::move(curve), coorientation, {}};
  for (auto& raw : detect_crossings(d.curve)) {
    const Strand over = choose_over(raw);
    d.crossings.push_back({raw.lo, raw.hi, std::move(raw.point), over});
  }
  return d;
}

/// Orientation reversal, preserving the 3D knot: edge i becomes n + 1 - i
/// and each crossing keeps its over strand.
inline TransverseDiagram reversed(const TransverseDiagram& d) {
  TransverseDiagram out{reversed(d.curve), d.coorientation, {}};
  for (const auto& c : d.crossings) {
    const EdgeRef lo = reversed_edge(d.curve, c.hi);
    const EdgeRef hi = reversed_edge(d.curve, c.lo);
    out.crossings.push_back({lo, hi, c.point, other(c.over)});
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const Crossing& a, const Crossing& b) {
              return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
            });
  return out;
}

/// Compares declared crossings against the geometry; one CrossingMismatch
/// per missing or extra pair.
inline std::vector<Violation> crossing_mismatches(const PolyCurve& curve,
                                                  const std::vector<EdgePair>& declared) {
  std::vector<EdgePair> detected;
  for (const auto& raw : detect_crossings(curve)) detected.push_back({raw.lo, raw.hi});
  std::vector<EdgePair> sorted_declared = declared;
  std::sort(sorted_declared.begin(), sorted_declared.end());
  std::vector<Violation> out;
  for (const auto& p : detected)
    if (!std::binary_search(sorted_declared.begin(), sorted_declared.end(), p))
      out.push_back({ViolationKind::CrossingMismatch, p, "missing"});
  for (const auto& p : sorted_declared)
    if (!std::binary_search(detected.begin(), detected.end(), p))
      out.push_back({ViolationKind::CrossingMismatch, p, "extra"});
  return out;
}

/// A diagram file that parsed syntactically but was rejected on geometry.
class DiagramRejected : public ParseError {
 public:
  explicit DiagramRejected(std::vector<Violation> violations)
      : ParseError(describe(violations)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string s = "diagram rejected:";
    for (const auto& v : vs) s += " [" + format_violation(v) + "]";
    return s;
  }
  std::vector<Violation> violations_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto start = s.find_first_not_of(" \t");
    if (start == std::string_view::npos) break;
    s.remove_prefix(start);
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) break;
    s.remove_prefix(end);
  }
  return out;
}

inline std::optional<std::size_t> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Parses the `transverse-diagram/1` format. Syntax errors throw ParseError
/// with a line number; geometric problems throw DiagramRejected.
inline TransverseDiagram parse_diagram(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string_view body;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = detail::trim(raw);
    if (!raw.empty()) lines.push_back({number, raw});
  }

  auto fail = [](std::size_t line, const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line) + ": " + msg);
  };

  std::size_t k = 0;
  auto expect = [&](std::string_view what) {
    if (k >= lines.size()) throw fail(number, "unexpected end of input, expected '" + std::string(what) + "'");
    if (lines[k].body != what)
      throw fail(lines[k].number, "expected '" + std::string(what) + "'");
    ++k;
  };

  expect("transverse-diagram/1");
  if (k >= lines.size()) throw fail(number, "missing coorientation");
  Coorientation coor;
  if (lines[k].body == "coorientation: +") {
    coor = Coorientation::Plus;
  } else if (lines[k].body == "coorientation: -") {
    coor = Coorientation::Minus;
  } else {
    throw fail(lines[k].number, "expected 'coorientation: +' or 'coorientation: -'");
  }
  ++k;
  expect("vertices:");

  std::vector<Point> vertices;
  while (k < lines.size() && lines[k].body != "over:") {
    const auto fields = detail::split_spaces(lines[k].body);
    if (fields.size() != 2) throw fail(lines[k].number, "vertex needs exactly two rationals");
    auto x = parse_rational(fields[0]);
    auto z = parse_rational(fields[1]);
    if (!x || !z) throw fail(lines[k].number, "malformed rational");
    vertices.push_back({std::move(*x), std::move(*z)});
    ++k;
  }
  expect("over:");
  if (vertices.size() < 3) throw fail(lines[k - 1].number, "need at least 3 vertices");

  struct Declared {
    EdgePair edges;
    Strand over;
    std::size_t line;
  };
  std::vector<Declared> declared;
  while (k < lines.size() && lines[k].body != "end") {
    const auto fields = detail::split_spaces(lines[k].body);
    if (fields.size() != 4 || fields[0] != "cross")
      throw fail(lines[k].number, "expected 'cross <lo> <hi> over=<lo|hi>'");
    auto lo = detail::parse_index(fields[1]);
    auto hi = detail::parse_index(fields[2]);
    if (!lo || !hi || *lo < 1 || *hi < 1 || *lo > vertices.size() || *hi > vertices.size())
      throw fail(lines[k].number, "edge index out of range");
    if (*lo >= *hi) throw fail(lines[k].number, "crossing requires lo < hi");
    Strand over;
    if (fields[3] == "over=lo") {
      over = Strand::Lo;
    } else if (fields[3] == "over=hi") {
      over = Strand::Hi;
    } else {
      throw fail(lines[k].number, "expected over=lo or over=hi");
    }
    for (const auto& d : declared)
      if (d.edges.first.index == *lo && d.edges.second.index == *hi)
        throw fail(lines[k].number, "duplicate crossing");
    declared.push_back({{EdgeRef{*lo}, EdgeRef{*hi}}, over, lines[k].number});
    ++k;
  }
  expect("end");
  if (k != lines.size()) throw fail(lines[k].number, "content after 'end'");

  PolyCurve curve(std::move(vertices));
  if (auto violations = check_genericity(curve); !violations.empty())
    throw DiagramRejected(std::move(violations));
  std::vector<EdgePair> pairs;
  for (const auto& d : declared) pairs.push_back(d.edges);
  if (auto mismatches = crossing_mismatches(curve, pairs); !mismatches.empty())
    throw DiagramRejected(std::move(mismatches));

  std::map<EdgePair, Strand> over_by_pair;
  for (const auto& d : declared) over_by_pair[d.edges] = d.over;
  return make_diagram(std::move(curve), coor, [&](const RawCrossing& raw) {
    return over_by_pair.at(EdgePair{raw.lo, raw.hi});
  });
}

/// Canonical text; parse_diagram(serialize_diagram(d)) == d.
inline std::string serialize_diagram(const TransverseDiagram& d) {
  std::string out = "transverse-diagram/1\n";
  out += d.coorientation == Coorientation::Plus ? "coorientation: +\n" : "coorientation: -\n";
  out += "vertices:\n";
  for (const auto& v : d.curve.vertices()) out += to_string(v.x) + " " + to_string(v.z) + "\n";
  out += "over:\n";
  for (const auto& c : d.crossings) {
    out += "cross " + std::to_string(c.lo.index) + " " + std::to_string(c.hi.index) +
           (c.over == Strand::Lo ? " over=lo\n" : " over=hi\n");
  }
  out += "end\n";
  return out;
}

/// Cyclic relabeling: vertex `shift + 1` becomes vertex 1.
inline PolyCurve rotated(const PolyCurve& curve, std::size_t shift) {
  std::vector<Point> out;
  out.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) out.push_back(curve.vertex(shift + i + 1));
  return PolyCurve(std::move(out));
}

/// Cyclic relabeling of a diagram; crossings follow their edges.
inline TransverseDiagram rotated(const TransverseDiagram& d, std::size_t shift) {
  const std::size_t n = d.curve.size();
  std::map<EdgePair, Strand> over_by_pair;
  for (const auto& c : d.crossings) {
    const EdgeRef a{(c.lo.index + n - 1 - shift % n) % n + 1};
    const EdgeRef b{(c.hi.index + n - 1 - shift % n) % n + 1};
    if (a < b)
      over_by_pair[{a, b}] = c.over;
    else
      over_by_pair[{b, a}] = other(c.over);
  }
  return make_diagram(rotated(d.curve, shift), d.coorientation,
                      [&](const RawCrossing& raw) { return over_by_pair.at({raw.lo, raw.hi}); });
}

/// Applies `f` to every vertex and re-derives the crossings, keeping each
/// crossing's over strand.
inline TransverseDiagram map_vertices(const TransverseDiagram& d,
                                      const std::function<Point(const Point&)>& f) {
  std::vector<Point> vs;
  for (const auto& v : d.curve.vertices()) vs.push_back(f(v));
  std::map<EdgePair, Strand> over_by_pair;
  for (const auto& c : d.crossings) over_by_pair[{c.lo, c.hi}] = c.over;
  return make_diagram(PolyCurve(std::move(vs)), d.coorientation, [&](const RawCrossing& raw) {
    auto it = over_by_pair.find({raw.lo, raw.hi});
    return it == over_by_pair.end() ? Strand::Hi : it->second;
  });
}

}  // namespace transknot
