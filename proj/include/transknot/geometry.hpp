#pragma once

// Exact planar predicates on the (x, z) projection plane. Every coordinate is
// an arbitrary-precision rational; nothing in here rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "transknot/error.hpp"

namespace transknot {

/// Rationals are kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline int sign(const Rational& r) { return r.sign(); }

/// `p` or `p/q`, q > 0, gcd(|p|, q) = 1.
inline std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses `[-]digits` or `[-]digits/digits`. Returns nullopt on malformed
/// text or a zero denominator. Non-reduced input is accepted and reduced.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) return std::nullopt;
  Integer num{std::string(num_text)};
  Integer den{std::string(den_text)};
  if (den == 0) return std::nullopt;
  if (negative) num = -num;
  return Rational(num, den);
}

struct Point {
  Rational x;
  Rational z;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.z != b.z) return a.z < b.z ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// A tangent direction. Two directions are the same ray when one is a
/// positive multiple of the other; `same_ray` tests that, `==` is exact.
struct Direction {
  Rational dx;
  Rational dz;

  friend bool operator==(const Direction&, const Direction&) = default;
  Direction operator-() const { return {-dx, -dz}; }
  bool is_zero() const { return dx == 0 && dz == 0; }
};

inline const Direction kUp{Rational(0), Rational(1)};
inline const Direction kDown{Rational(0), Rational(-1)};

inline Direction operator-(const Point& a, const Point& b) { return {a.x - b.x, a.z - b.z}; }
inline Point operator+(const Point& p, const Direction& d) { return {p.x + d.dx, p.z + d.dz}; }
inline Direction operator*(const Rational& s, const Direction& d) { return {s * d.dx, s * d.dz}; }

inline Rational cross(const Direction& a, const Direction& b) { return a.dx * b.dz - a.dz * b.dx; }
inline Rational dot(const Direction& a, const Direction& b) { return a.dx * b.dx + a.dz * b.dz; }
inline Rational norm2(const Direction& d) { return dot(d, d); }

inline bool same_ray(const Direction& a, const Direction& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}
inline bool parallel(const Direction& a, const Direction& b) { return cross(a, b) == 0; }

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << to_string(p.x) << "," << to_string(p.z) << ")";
}
inline std::ostream& operator<<(std::ostream& os, const Direction& d) {
  return os << "<" << to_string(d.dx) << "," << to_string(d.dz) << ">";
}

/// Sign of det(q - p, r - p); +1 is counterclockwise.
inline int orient(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q - p, r - p));
}

/// The unique transversal intersection point interior to both segments.
/// Endpoint contact, collinear overlap and disjointness all give nullopt.
inline std::optional<Point> segment_intersection(const Point& a1, const Point& a2,
                                                 const Point& b1, const Point& b2) {
  const int o1 = orient(a1, a2, b1);
  const int o2 = orient(a1, a2, b2);
  const int o3 = orient(b1, b2, a1);
  const int o4 = orient(b1, b2, a2);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return std::nullopt;
  if (o1 == o2 || o3 == o4) return std::nullopt;
  const Direction da = a2 - a1;
  const Direction db = b2 - b1;
  const Rational t = cross(b1 - a1, db) / cross(da, db);
  return a1 + t * da;
}

/// True iff u = a*t1 + b*t2 with a > 0 and b > 0.
inline bool in_open_cone(const Direction& u, const Direction& t1, const Direction& t2) {
  const int det = sign(cross(t1, t2));
  if (det == 0) throw DegenerateCone("in_open_cone: tangents are linearly dependent");
  return sign(cross(u, t2)) == det && sign(cross(t1, u)) == det;
}

/// Closed-cone variant: u = a*t1 + b*t2 with a >= 0, b >= 0, u != 0.
inline bool in_closed_cone(const Direction& u, const Direction& t1, const Direction& t2) {
  const int det = sign(cross(t1, t2));
  if (det == 0) throw DegenerateCone("in_closed_cone: tangents are linearly dependent");
  const int a = sign(cross(u, t2)) * det;
  const int b = sign(cross(t1, u)) * det;
  return a >= 0 && b >= 0 && !u.is_zero();
}

/// Whether u lies strictly inside the angular interval swept when rotating
/// d_in to d_out through the turn of magnitude < pi.
inline bool corner_sweep_contains(const Direction& d_in, const Direction& d_out,
                                  const Direction& u) {
  const int turn = sign(cross(d_in, d_out));
  if (turn == 0) {
    if (dot(d_in, d_out) < 0) throw ReversalError("corner_sweep_contains: antiparallel turn");
    return false;
  }
  return sign(cross(d_in, u)) == turn && sign(cross(u, d_out)) == turn;
}

/// Squared distance from p to the closed segment [a, b].
inline Rational dist2_point_segment(const Point& p, const Point& a, const Point& b) {
  const Direction ab = b - a;
  const Direction ap = p - a;
  const Rational len2 = norm2(ab);
  if (len2 == 0) return norm2(ap);
  const Rational t = dot(ap, ab);
  if (t <= 0) return norm2(ap);
  if (t >= len2) return norm2(p - b);
  const Rational c = cross(ab, ap);
  return c * c / len2;
}

/// Squared distance between two closed segments that do not cross.
inline Rational dist2_segment_segment(const Point& a1, const Point& a2, const Point& b1,
                                      const Point& b2) {
  Rational best = dist2_point_segment(a1, b1, b2);
  for (const Rational& d : {dist2_point_segment(a2, b1, b2), dist2_point_segment(b1, a1, a2),
                            dist2_point_segment(b2, a1, a2)})
    if (d < best) best = d;
  return best;
}

/// Approximate conversion for rendering and diagnostics only.
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace transknot
