#pragma once

// SVG 1.1 picture of a diagram. The plane's z axis points up the page. The
// under strand at each crossing is cut for one gap radius on either side,
// and every gap is also marked by an invisible <circle class="gap">.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "transknot/diagram.hpp"
#include "transknot/geometry.hpp"
#include "transknot/invariants.hpp"

namespace transknot {

inline std::string render_svg(const TransverseDiagram& d) {
  const PolyCurve& curve = d.curve;
  const std::size_t n = curve.size();
  const double gap = std::sqrt(to_double(detail::min_feature_separation2(d))) / 10;

  double xmin = to_double(curve.vertex(1).x), xmax = xmin;
  double zmin = to_double(curve.vertex(1).z), zmax = zmin;
  for (const auto& v : curve.vertices()) {
    xmin = std::min(xmin, to_double(v.x));
    xmax = std::max(xmax, to_double(v.x));
    zmin = std::min(zmin, to_double(v.z));
    zmax = std::max(zmax, to_double(v.z));
  }
  const double margin = 0.05 * std::max({xmax - xmin, zmax - zmin, 1.0});

  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  // Adding 0.0 turns a negative zero into +0 so it prints as "0.000000".
  auto flip = [](double z) { return -z + 0.0; };
  auto put = [&](double x, double z) { os << x + 0.0 << ',' << flip(z); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << xmin - margin << ' ' << flip(zmax + margin) << ' ' << (xmax - xmin) + 2 * margin << ' '
     << (zmax - zmin) + 2 * margin << "\">\n";

  // Cut intervals (in edge parameter t) per under edge.
  std::vector<std::vector<std::pair<double, double>>> cuts(n + 1);
  for (const auto& c : d.crossings) {
    const EdgeRef e = c.under_edge();
    const Direction dir = curve.direction(e);
    const double t = to_double(dot(c.point - curve.edge_start(e), dir) / norm2(dir));
    const double dt = gap / std::sqrt(to_double(norm2(dir)));
    cuts[e.index].push_back({t - dt, t + dt});
  }

  os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
        "vector-effect=\"non-scaling-stroke\" stroke-linejoin=\"round\" d=\"";
  const Point& first = curve.vertex(1);
  os << 'M';
  put(to_double(first.x), to_double(first.z));
  for (std::size_t i = 1; i <= n; ++i) {
    const EdgeRef e{i};
    const double ax = to_double(curve.edge_start(e).x), az = to_double(curve.edge_start(e).z);
    const double bx = to_double(curve.edge_end(e).x), bz = to_double(curve.edge_end(e).z);
    auto at = [&](double t) { return std::pair{ax + t * (bx - ax), az + t * (bz - az)}; };
    auto& cs = cuts[i];
    std::sort(cs.begin(), cs.end());
    for (const auto& [t0, t1] : cs) {
      auto [x0, z0] = at(t0);
      auto [x1, z1] = at(t1);
      os << " L";
      put(x0, z0);
      os << " M";
      put(x1, z1);
    }
    os << " L";
    put(bx, bz);
  }
  os << "\"/>\n";

  for (const auto& c : d.crossings) {
    os << "<circle class=\"gap\" cx=\"" << to_double(c.point.x) << "\" cy=\""
       << flip(to_double(c.point.z)) << "\" r=\"" << gap << "\" fill=\"none\" stroke=\"none\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace transknot
