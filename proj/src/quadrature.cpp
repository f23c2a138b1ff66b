#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ballres::quadrature {

std::vector<Node1D> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  std::vector<Node1D> nodes(n);
  // Newton on P_n with the Tricomi initial guess; symmetric pairs share work.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  return nodes;
}

std::vector<Node1D> gauss_legendre(int n, double a, double b) {
  auto nodes = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (auto& nd : nodes) {
    nd.x = mid + half * nd.x;
    nd.w *= half;
  }
  return nodes;
}

std::vector<SphereNode> sphere_rule(int order) {
  if (order < 1) throw std::invalid_argument("sphere_rule: need order >= 1");
  const int ntheta = order / 2 + 1;   // exact for cos-theta degree <= 2*ntheta-1 >= order
  const int nphi = order + 1;         // exact for e^{i m phi}, |m| <= order
  const auto gl = gauss_legendre(ntheta);
  std::vector<SphereNode> nodes;
  nodes.reserve(static_cast<std::size_t>(ntheta) * nphi);
  const double wphi = 2.0 * M_PI / nphi;
  for (const auto& nd : gl) {
    const double theta = std::acos(nd.x);
    for (int j = 0; j < nphi; ++j) {
      nodes.push_back({{theta, wphi * j}, nd.w * wphi});
    }
  }
  return nodes;
}

}  // namespace ballres::quadrature
