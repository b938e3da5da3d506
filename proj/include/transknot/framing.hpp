#pragma once

// Framing-covering arithmetic: the integer (or mod m_T) torsor of framings,
// the relative-framing existence test, the relative Bennequin number, and the
// verdict of the stabilization distinguishing argument.
//
// Manifold topology is never computed here. It enters as declared flags in
// ManifoldDescriptor and is taken at face value.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/error.hpp"
#include "transknot/invariants.hpp"

namespace transknot {

struct ManifoldDescriptor {
  bool euler_finite_order = false;
  bool closed_irreducible_atoroidal = false;
  bool tight_contact = false;
  bool has_nonseparating_sphere = false;  // M = (S^1 x S^2) # M'
  std::vector<std::int64_t> torus_pairings;
  bool pairings_exhaustive = false;
};

/// Framing classes as an integer torsor; modulus 0 means all of Z.
struct FramingTorsor {
  std::int64_t modulus = 0;

  std::int64_t reduce(std::int64_t x) const {
    if (modulus == 0) return x;
    const std::int64_t r = x % modulus;
    return r < 0 ? r + modulus : r;
  }
};

inline std::int64_t compute_m_T(const std::vector<std::int64_t>& pairings) {
  std::int64_t g = 0;
  for (std::int64_t p : pairings) g = std::gcd(g, p < 0 ? -p : p);
  return g;
}

inline std::int64_t act(const FramingTorsor& t, std::int64_t k, std::int64_t x) {
  return t.reduce(x + k);
}

/// Framing change along a loop given as elementary twist events.
inline std::int64_t loop_delta(const std::vector<std::int64_t>& events) {
  return std::accumulate(events.begin(), events.end(), std::int64_t{0});
}

enum class ExistsReason { FiniteOrderEuler, ClosedIrreducibleAtoroidal, TightContact, ZeroModulus };

inline const char* reason_name(ExistsReason r) {
  switch (r) {
    case ExistsReason::FiniteOrderEuler: return "euler-finite-order";
    case ExistsReason::ClosedIrreducibleAtoroidal: return "closed-irreducible-atoroidal";
    case ExistsReason::TightContact: return "tight-contact";
    case ExistsReason::ZeroModulus: return "m_T=0";
  }
  return "?";
}

struct ExistenceVerdict {
  enum class Kind { Exists, ModOnly, Unknown };
  Kind kind = Kind::Unknown;
  ExistsReason reason = ExistsReason::ZeroModulus;  // meaningful for Exists
  std::int64_t modulus = 0;                         // meaningful for ModOnly

  bool exists() const { return kind == Kind::Exists; }
};

/// The first sufficient condition that holds, in the order the conditions
/// are listed, then the m_T = 0 case.
inline ExistenceVerdict relative_framing_exists(const ManifoldDescriptor& desc) {
  using K = ExistenceVerdict::Kind;
  if (desc.euler_finite_order) return {K::Exists, ExistsReason::FiniteOrderEuler, 0};
  if (desc.closed_irreducible_atoroidal)
    return {K::Exists, ExistsReason::ClosedIrreducibleAtoroidal, 0};
  if (desc.tight_contact) return {K::Exists, ExistsReason::TightContact, 0};
  const std::int64_t m = compute_m_T(desc.torus_pairings);
  if (m == 0) return {K::Exists, ExistsReason::ZeroModulus, 0};
  if (desc.pairings_exhaustive) return {K::ModOnly, ExistsReason::ZeroModulus, m};
  return {K::Unknown, ExistsReason::ZeroModulus, m};
}

struct ComponentLabel {
  std::string curve_class;
  Coorientation coorientation = Coorientation::Plus;
  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

struct RelativeFraming {
  ComponentLabel component;
  std::int64_t constant = 0;
};

/// Each free homotopy class carries exactly two transverse components.
inline std::pair<ComponentLabel, ComponentLabel> transverse_components(const std::string& curve_class) {
  return {{curve_class, Coorientation::Plus}, {curve_class, Coorientation::Minus}};
}

inline std::int64_t relative_bennequin(const RelativeFraming& f, const TransverseDiagram& d) {
  if (d.coorientation != f.component.coorientation)
    throw ComponentMismatch("relative_bennequin: diagram coorientation does not match the framing's component");
  return self_linking(d) + f.constant;
}

enum class FramedEquality { Equal, NotEqual, Indeterminate };

struct FramedClass {
  std::string label;
  std::int64_t offset = 0;
};

/// Distinct nonzero offsets of one knot are non-isotopic in F unless M has a
/// nonseparating sphere, in which case the model cannot decide.
inline FramedEquality framed_classes_equal(const ManifoldDescriptor& desc, const FramedClass& a,
                                           const FramedClass& b) {
  if (a.label != b.label) return FramedEquality::NotEqual;
  if (a.offset == b.offset) return FramedEquality::Equal;
  return desc.has_nonseparating_sphere ? FramedEquality::Indeterminate : FramedEquality::NotEqual;
}

enum class Verdict { Distinguished, Inconclusive };

struct DistinguishReport {
  Verdict verdict = Verdict::Inconclusive;
  std::int64_t torsor_shift = 0;  // F(K1) = shift . F(K0)
  std::string torsor_line;
};

/// K1 is K0 stabilized k times, so F(K1) = (-2k).F(K0).
inline DistinguishReport distinguish_by_relative_framing(const ManifoldDescriptor& desc,
                                                         bool zero_homologous, std::int64_t k) {
  if (!relative_framing_exists(desc).exists())
    throw PreconditionFailed("distinguish: existence of a relative framing is not established");
  DistinguishReport r;
  r.torsor_shift = -2 * k;
  r.torsor_line = "F(K1) = (" + std::to_string(r.torsor_shift) + ")·F(K0)";
  const bool separated = zero_homologous || !desc.has_nonseparating_sphere;
  r.verdict = (k != 0 && separated) ? Verdict::Distinguished : Verdict::Inconclusive;
  return r;
}

}  // namespace transknot
