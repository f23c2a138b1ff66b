#pragma once

#include <span>
#include <vector>

#include "complexmath.hpp"
#include "green.hpp"
#include "quadrature.hpp"

namespace ballres::imaging {

struct MeasurementSurface {
  double radius = 100.0;  // far-field sphere radius, >> unit ball
  int quad_order = 30;    // spherical-harmonic exactness of the node set

  void validate() const;
};

// Nodes and weights on the measurement sphere directions (weights sum to 4 pi;
// surface integrals carry the radius^2 Jacobian separately).
std::vector<quadrature::SphereNode> sphere_quadrature(int order);

// Point-dipole data on the surface: E(x_i) = G_0(x_i, z0, k) p.
std::vector<Vec3c> measured_field_free(Vec3 z0, Vec3 p, double k,
                                       const MeasurementSurface& surf);

// Center dipole in the high-contrast unit ball with the special polarization:
// exterior field b_0 E^TM_{1,0}(k, x) sampled at the surface nodes.
std::vector<Vec3c> measured_field_ball(const green::ContrastContext& ctx,
                                       const MeasurementSurface& surf);

// Back-propagation: I(z) = int conj(G_0(z,x,k)) E_meas(x) dsigma(x), returned
// per grid point. data must be sampled on surf's node set.
std::vector<Vec3c> imaging_functional(std::span<const Vec3c> data, double k,
                                      std::span<const Vec3> grid,
                                      const MeasurementSurface& surf);

// | k int (conj(G_0(xi,x,k)) q)^t . G_0(xi,z,k) p dsigma(xi) - q . Im G_0(x,z,k) p |,
// the O(1/R) defect of the Helmholtz-Kirchhoff identity.
double hk_residual(Vec3 x, Vec3 z, Vec3 p, Vec3 q, double k,
                   const MeasurementSurface& surf);

// Tangential point-spread profile along a diameter: (1/k) Im phi(k_tau, t).
// k_tau = k gives the free-space baseline.
std::vector<double> point_spread(const green::ContrastContext& ctx,
                                 std::span<const double> t);

}  // namespace ballres::imaging
