#pragma once

#include <vector>

#include "complexmath.hpp"
#include "specfun.hpp"

namespace ballres::quadrature {

struct Node1D {
  double x;
  double w;
};

// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2n-1.
std::vector<Node1D> gauss_legendre(int n);

// Same rule mapped to [a, b].
std::vector<Node1D> gauss_legendre(int n, double a, double b);

struct SphereNode {
  specfun::SphereDirection dir;
  double weight;
};

// Product rule (Gauss-Legendre in cos theta x uniform azimuth) integrating
// every spherical harmonic of degree <= order exactly; weights sum to 4 pi.
std::vector<SphereNode> sphere_rule(int order);

}  // namespace ballres::quadrature
