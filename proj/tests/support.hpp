#pragma once

// Shared test helpers: fixture loading and oracles that live only in tests.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/geometry.hpp"
#include "transknot/invariants.hpp"

namespace testing_support {

using namespace transknot;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(TRANSKNOT_DATA_DIR) + "/" + name;
}

inline TransverseDiagram fixture(const std::string& name) {
  return parse_diagram(read_text(fixture_path(name)));
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"u_minus.td", "trefoil.td", "trefoil_mirror.td"};
  return names;
}

inline Point pt(long x, long z) { return {Rational(x), Rational(z)}; }
inline Direction dir(long dx, long dz) { return {Rational(dx), Rational(dz)}; }

inline PolyCurve curve_of(const std::vector<std::pair<long, long>>& vs) {
  std::vector<Point> ps;
  for (auto [x, z] : vs) ps.push_back(pt(x, z));
  return PolyCurve(std::move(ps));
}

/// One-crossing figure-eight with lobe height k: the cone at the origin
/// holds "up" for every k > 0.
inline PolyCurve figure_eight(const Rational& k) {
  auto p = [](const Rational& x, const Rational& z) { return Point{x, z}; };
  return PolyCurve({p(-1, -k), p(1, k), p(2, k), p(3, 0), p(2, -k), p(1, -k), p(-1, k), p(-2, k),
                    p(-3, 0), p(-2, -k)});
}

// ---------------------------------------------------------------------------
// Alexander polynomial oracle. v2 equals the z^2 coefficient of the Conway
// polynomial; for a symmetrized Alexander polynomial sum a_j t^j this is
// sum_{j>0} a_j j^2.

inline Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

/// Coefficients of the Alexander polynomial, lowest degree first,
/// normalized to be palindromic with value 1 at t = 1.
inline std::vector<Rational> alexander_polynomial(const TransverseDiagram& d) {
  const auto seq = gauss_sequence(d, 1);
  const std::size_t n = d.crossings.size();
  // Arcs start right after each underpass; arc_at[pos] is the arc in
  // which position pos lies.
  std::vector<std::size_t> arc_at(seq.size());
  std::size_t under_count = 0;
  for (const auto& g : seq) under_count += g.over ? 0 : 1;
  std::size_t arc = under_count - 1;  // wraps: before the first underpass
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    arc_at[pos] = arc;
    if (!seq[pos].over) arc = (arc + 1) % under_count;
  }
  // For each crossing: over arc, incoming under arc, outgoing under arc.
  std::vector<std::size_t> over_arc(n), in_arc(n), out_arc(n);
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    const auto& g = seq[pos];
    if (g.over) {
      over_arc[g.crossing] = arc_at[pos];
    } else {
      in_arc[g.crossing] = arc_at[pos];
      out_arc[g.crossing] = (arc_at[pos] + 1) % under_count;
    }
  }
  auto alexander_at = [&](const Rational& t) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t c = 0; c < n; ++c) {
      const int s = crossing_sign(d, d.crossings[c]);
      // Fox derivatives of x_k x_i x_k^-1 x_j^-1, or of x_k^-1 x_i x_k x_j^-1
      // multiplied through by t, where k is the over arc.
      m[c][over_arc[c]] += s > 0 ? Rational(1 - t) : Rational(t - 1);
      m[c][in_arc[c]] += s > 0 ? t : Rational(1);
      m[c][out_arc[c]] -= s > 0 ? Rational(1) : t;
    }
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) minor.emplace_back(m[r].begin() + 1, m[r].end());
    return minor.empty() ? Rational(1) : det(minor);
  };
  // Interpolate det(t), degree <= n - 1, through t = 2, ..., n + 1.
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational ti(static_cast<long>(i) + 2);
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational tj(static_cast<long>(j) + 2);
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= tj * basis[k];
      }
      basis = std::move(next);
      denom *= ti - tj;
    }
    const Rational yi = alexander_at(ti) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += yi * basis[k];
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  std::vector<Rational> poly(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end());
  Rational at_one = 0;
  for (const auto& c : poly) at_one += c;
  for (auto& c : poly) c /= at_one;
  return poly;
}

inline bool palindromic(const std::vector<Rational>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != p[p.size() - 1 - i]) return false;
  return true;
}

inline Rational conway_c2(const std::vector<Rational>& p) {
  const std::size_t mid = (p.size() - 1) / 2;
  Rational c2 = 0;
  for (std::size_t j = 1; mid + j < p.size(); ++j) c2 += p[mid + j] * static_cast<long>(j * j);
  return c2;
}

}  // namespace testing_support
