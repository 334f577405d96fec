#include "sphere/analysis.hpp"

#include "sphere/random.hpp"

#include <cstdio>
#include <string>

namespace sphere {

std::string project_svg(const PointConfig& config, std::uint64_t plane_seed) {
  const int n = config.dimension();
  const CounterRng rng(plane_seed);
  // Gram-Schmidt on two Gaussian vectors; redraw in the (unlikely) degenerate case.
  Vector e1(n), e2(n);
  for (std::uint64_t attempt = 0;; ++attempt) {
    for (int k = 0; k < n; ++k) {
      e1(k) = rng.normal(attempt * 2 * n + k);
      e2(k) = rng.normal(attempt * 2 * n + n + k);
    }
    if (e1.norm() < 1e-12) continue;
    e1.normalize();
    e2 -= e2.dot(e1) * e1;
    if (e2.norm() < 1e-12) continue;
    e2.normalize();
    break;
  }

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
      "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"/>\n";
  char buf[160];
  const Matrix& x = config.points();
  const double dmin = config.size() > 1 ? config.min_squared_distance() : 0.0;
  for (int i = 0; i < config.size(); ++i) {
    for (int j = i + 1; j < config.size(); ++j) {
      if ((x.col(i) - x.col(j)).squaredNorm() > dmin * (1.0 + 1e-6)) continue;
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" stroke=\"gray\" stroke-width=\"0.004\"/>\n",
                    e1.dot(x.col(i)), -e2.dot(x.col(i)), e1.dot(x.col(j)), -e2.dot(x.col(j)));
      svg += buf;
    }
  }
  for (int i = 0; i < config.size(); ++i) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.012\" fill=\"black\"/>\n",
                  e1.dot(x.col(i)), -e2.dot(x.col(i)));
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace sphere
