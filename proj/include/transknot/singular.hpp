#pragma once

// Singular diagrams with transverse double points, their signed resolutions,
// and finite-order (Vassiliev) defect checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/error.hpp"
#include "transknot/invariants.hpp"
#include "transknot/transversality.hpp"

namespace transknot {

/// An unresolved crossing: the over/under datum has been erased.
struct DoublePoint {
  EdgeRef lo;
  EdgeRef hi;
  Point point;
  friend bool operator==(const DoublePoint&, const DoublePoint&) = default;
};

using Site = std::variant<Crossing, DoublePoint>;

struct SingularDiagram {
  PolyCurve curve;
  Coorientation coorientation = Coorientation::Plus;
  std::vector<Site> sites;  // canonical (lo, hi) order

  std::size_t double_point_count() const {
    std::size_t n = 0;
    for (const auto& s : sites) n += std::holds_alternative<DoublePoint>(s) ? 1 : 0;
    return n;
  }
};

enum class Resolution { Pos, Neg };

/// One choice per double point, in site order.
struct ResolutionAssignment {
  std::vector<Resolution> choices;
};

/// A site can be a double point only if both of its resolutions are valid
/// in place: the forbidden direction must avoid the closed tangent cone.
inline bool admissible_double_point(const TransverseDiagram& d, const Crossing& c) {
  return !in_closed_cone(kUp, effective_tangent(d, c.lo), effective_tangent(d, c.hi));
}

inline std::vector<std::size_t> admissible_sites(const TransverseDiagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < d.crossings.size(); ++k)
    if (admissible_double_point(d, d.crossings[k])) out.push_back(k);
  return out;
}

/// Turns the crossings with the given 0-based indices into double points.
inline SingularDiagram make_singular(const TransverseDiagram& d,
                                     const std::set<std::size_t>& sites) {
  SingularDiagram s{d.curve, d.coorientation, {}};
  for (std::size_t k : sites) {
    if (k >= d.crossings.size())
      throw InadmissibleDoublePoint("make_singular: no crossing #" + std::to_string(k + 1));
    if (!admissible_double_point(d, d.crossings[k])) {
      std::ostringstream os;
      os << "make_singular: crossing #" << k + 1 << " at " << d.crossings[k].point
         << " has its over strand forced";
      throw InadmissibleDoublePoint(os.str());
    }
  }
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const Crossing& c = d.crossings[k];
    if (sites.count(k))
      s.sites.push_back(DoublePoint{c.lo, c.hi, c.point});
    else
      s.sites.push_back(c);
  }
  return s;
}

/// Resolves every double point; Pos yields crossing sign +1, Neg yields -1.
inline TransverseDiagram resolve(const SingularDiagram& s, const ResolutionAssignment& a) {
  if (a.choices.size() != s.double_point_count())
    throw PreconditionFailed("resolve: assignment does not cover every double point");
  TransverseDiagram d{s.curve, s.coorientation, {}};
  std::size_t next = 0;
  for (const auto& site : s.sites) {
    if (const auto* c = std::get_if<Crossing>(&site)) {
      d.crossings.push_back(*c);
      continue;
    }
    const auto& dp = std::get<DoublePoint>(site);
    Crossing c{dp.lo, dp.hi, dp.point, Strand::Hi};
    const int want = a.choices[next++] == Resolution::Pos ? 1 : -1;
    if (crossing_sign(d, c) != want) c.over = Strand::Lo;
    d.crossings.push_back(std::move(c));
  }
  return d;
}

/// +1 iff the number of negative resolutions is even.
inline int assignment_sign(const ResolutionAssignment& a) {
  std::size_t negatives = 0;
  for (auto r : a.choices) negatives += r == Resolution::Neg ? 1 : 0;
  return negatives % 2 == 0 ? 1 : -1;
}

/// A named integer-valued diagram invariant with a claimed order.
struct InvariantHandle {
  std::string name;
  int claimed_order = 0;
  std::function<std::int64_t(const TransverseDiagram&)> evaluate;
};

/// An invariant of (diagram, framing) pairs.
struct FramedInvariantHandle {
  std::string name;
  int claimed_order = 0;
  std::function<std::int64_t(const TransverseDiagram&, std::int64_t)> evaluate;
};

inline InvariantHandle writhe_invariant() {
  return {"writhe", 1, [](const TransverseDiagram& d) -> std::int64_t { return writhe(d); }};
}

inline InvariantHandle v2_invariant() {
  return {"v2", 2, [](const TransverseDiagram& d) -> std::int64_t { return v2(d); }};
}

/// Transverse invariant d -> inv(d, sl(d)): the framing is the diagram's
/// natural framing.
inline InvariantHandle pullback_framed_invariant(FramedInvariantHandle inv) {
  auto eval = std::move(inv.evaluate);
  return {"pullback(" + inv.name + ")", inv.claimed_order,
          [eval](const TransverseDiagram& d) { return eval(d, self_linking(d)); }};
}

inline FramedInvariantHandle framing_invariant() {
  return {"framing", 1, [](const TransverseDiagram&, std::int64_t f) { return f; }};
}

inline InvariantHandle sl_pullback_invariant() {
  return pullback_framed_invariant(framing_invariant());
}

struct DefectReport {
  std::string invariant_name;
  int order_tested = 0;
  std::int64_t defect = 0;
  std::size_t resolutions_evaluated = 0;
};

/// Signed sum of `inv` over all 2^m resolutions. Assignment number k
/// resolves double point j negatively iff bit j of k is set.
inline DefectReport vassiliev_defect(const InvariantHandle& inv, const SingularDiagram& s) {
  const std::size_t m = s.double_point_count();
  if (m == 0) throw PreconditionFailed("vassiliev_defect: no double points");
  if (m > 20) throw PreconditionFailed("vassiliev_defect: too many double points");
  DefectReport report{inv.name, static_cast<int>(m) - 1, 0, 0};
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    ResolutionAssignment a;
    for (std::size_t j = 0; j < m; ++j)
      a.choices.push_back((k >> j) & 1 ? Resolution::Neg : Resolution::Pos);
    report.defect += assignment_sign(a) * inv.evaluate(resolve(s, a));
    ++report.resolutions_evaluated;
  }
  return report;
}

struct OrderCheck {
  bool holds = true;
  std::vector<std::int64_t> defects;
};

/// Evidence that `inv` has order <= n: every member of `family` (each with
/// exactly n + 1 double points) has zero defect. Not a proof.
inline OrderCheck is_order_at_most(const InvariantHandle& inv, int n,
                                   const std::vector<SingularDiagram>& family) {
  OrderCheck out;
  for (const auto& s : family) {
    if (s.double_point_count() != static_cast<std::size_t>(n + 1))
      throw FamilyArityError("is_order_at_most: member has " +
                             std::to_string(s.double_point_count()) + " double points, expected " +
                             std::to_string(n + 1));
    const auto report = vassiliev_defect(inv, s);
    out.defects.push_back(report.defect);
    if (report.defect != 0) out.holds = false;
  }
  return out;
}

}  // namespace transknot
