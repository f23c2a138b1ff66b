#include "imaging.hpp"

#include <cmath>
#include <stdexcept>

#include "modes.hpp"
#include "parallel.hpp"
#include "specfun.hpp"

namespace ballres::imaging {

void MeasurementSurface::validate() const {
  if (!(radius > 1.0)) throw std::invalid_argument("measurement radius must exceed the domain");
  if (quad_order < 8) throw std::invalid_argument("measurement quadrature order must be >= 8");
}

std::vector<quadrature::SphereNode> sphere_quadrature(int order) {
  return quadrature::sphere_rule(order);
}

std::vector<Vec3c> measured_field_free(Vec3 z0, Vec3 p, double k,
                                       const MeasurementSurface& surf) {
  surf.validate();
  if (!(z0.norm() < surf.radius))
    throw std::invalid_argument("source must lie inside the measurement sphere");
  const auto nodes = sphere_quadrature(surf.quad_order);
  std::vector<Vec3c> data(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const Vec3 x = surf.radius * specfun::unit_vector(nodes[i].dir);
    data[i] = green::green_free(x, z0, k) * p;
  });
  return data;
}

std::vector<Vec3c> measured_field_ball(const green::ContrastContext& ctx,
                                       const MeasurementSurface& surf) {
  surf.validate();
  ctx.validate();
  const cplx b0 = green::ball_b0(ctx);
  const modes::MultipoleField e0{spectrum::ModeFamily::TM, modes::FieldKind::Radiating, 1, 0,
                                 ctx.k};
  const auto nodes = sphere_quadrature(surf.quad_order);
  std::vector<Vec3c> data(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const Vec3 x = surf.radius * specfun::unit_vector(nodes[i].dir);
    data[i] = b0 * modes::eval_multipole(e0, x);
  });
  return data;
}

std::vector<Vec3c> imaging_functional(std::span<const Vec3c> data, double k,
                                      std::span<const Vec3> grid,
                                      const MeasurementSurface& surf) {
  surf.validate();
  const auto nodes = sphere_quadrature(surf.quad_order);
  if (data.size() != nodes.size())
    throw std::invalid_argument("data sampling does not match the surface quadrature");
  const double jac = surf.radius * surf.radius;

  std::vector<Vec3c> image(grid.size());
  parallel_for(grid.size(), [&](std::size_t gi) {
    std::vector<Vec3c> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Vec3 x = surf.radius * specfun::unit_vector(nodes[i].dir);
      Mat3c gconj = green::green_free(grid[gi], x, k);
      for (auto& e : gconj.m) e = std::conj(e);
      terms[i] = (nodes[i].weight * jac) * (gconj * data[i]);
    }
    image[gi] = pairwise_sum(terms);
  });
  return image;
}

double hk_residual(Vec3 x, Vec3 z, Vec3 p, Vec3 q, double k,
                   const MeasurementSurface& surf) {
  surf.validate();
  const auto nodes = sphere_quadrature(surf.quad_order);
  const double jac = surf.radius * surf.radius;
  std::vector<cplx> terms(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const Vec3 xi = surf.radius * specfun::unit_vector(nodes[i].dir);
    Mat3c gx = green::green_free(xi, x, k);
    for (auto& e : gx.m) e = std::conj(e);
    const Mat3c gz = green::green_free(xi, z, k);
    terms[i] = (nodes[i].weight * jac) * dot(gx * q, gz * p);
  });
  const cplx lhs = k * pairwise_sum(terms);
  const cplx rhs = dot(to_complex(q), green::im_green_free(x, z, k) * p);
  return std::abs(lhs - rhs);
}

std::vector<double> point_spread(const green::ContrastContext& ctx,
                                 std::span<const double> t) {
  std::vector<double> out(t.size());
  parallel_for(t.size(), [&](std::size_t i) {
    out[i] = green::phi_radial(ctx, t[i]).imag() / ctx.k;
  });
  return out;
}

}  // namespace ballres::imaging
