#include "modes.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace ballres::modes {

using specfun::cal_H;
using specfun::cal_J;
using specfun::sph_bessel_j;
using specfun::sph_hankel1;

namespace {

double root_nn1(int n) { return std::sqrt(static_cast<double>(n) * (n + 1.0)); }

void check_degree(int n) {
  if (n < 1) throw std::domain_error("multipole degree n must be >= 1");
}

// radial factors (b_n, B_n) by kind
cplx radial_b(FieldKind kind, int n, cplx z) {
  return kind == FieldKind::Interior ? sph_bessel_j(n, z) : sph_hankel1(n, z);
}
cplx radial_B(FieldKind kind, int n, cplx z) {
  return kind == FieldKind::Interior ? cal_J(n, z) : cal_H(n, z);
}

}  // namespace

Vec3c eval_multipole(const MultipoleField& field, Vec3 x) {
  check_degree(field.n);
  const double r = x.norm();
  const cplx w = field.wavenumber;
  const double nn1 = root_nn1(field.n);

  if (r < 1e-8) {
    if (field.kind == FieldKind::Radiating)
      throw std::domain_error("radiating multipole singular at the origin");
    if (field.family == ModeFamily::TE || field.n >= 2) return {};
    // TM n = 1: the limit (2i/3)[sqrt(2) U_1^m + Y_1^m xhat] is independent of
    // the direction used to evaluate the harmonics.
    const specfun::SphereDirection d{M_PI / 2.0, 0.0};
    const auto vh = specfun::vector_harmonics({1, field.m}, d);
    const Vec3 xhat = specfun::unit_vector(d);
    return (2.0 * kImagUnit / 3.0) * (std::sqrt(2.0) * vh.U + vh.Y * to_complex(xhat));
  }

  const specfun::SphereDirection d{std::acos(std::clamp(x.z / r, -1.0, 1.0)),
                                   std::atan2(x.y, x.x)};
  const auto vh = specfun::vector_harmonics({field.n, field.m}, d);
  const cplx wr = w * r;

  if (field.family == ModeFamily::TE)
    return (-nn1 * radial_b(field.kind, field.n, wr)) * vh.V;

  const Vec3 xhat = specfun::unit_vector(d);
  const cplx pref = 1.0 / (kImagUnit * wr);
  return (-nn1 * pref * radial_B(field.kind, field.n, wr)) * vh.U +
         (-static_cast<double>(field.n) * (field.n + 1.0) * pref *
          radial_b(field.kind, field.n, wr) * vh.Y) *
             to_complex(xhat);
}

Vec3c tangential_trace(const MultipoleField& field, double r, specfun::SphereDirection dir) {
  check_degree(field.n);
  if (!(r > 0)) throw std::domain_error("tangential trace needs r > 0");
  const auto vh = specfun::vector_harmonics({field.n, field.m}, dir);
  const cplx wr = field.wavenumber * r;
  const double nn1 = root_nn1(field.n);
  if (field.family == ModeFamily::TE)
    return (nn1 * radial_b(field.kind, field.n, wr)) * vh.U;
  return (-nn1 / (kImagUnit * wr) * radial_B(field.kind, field.n, wr)) * vh.V;
}

cplx lommel_radial(int n, cplx a, cplx b) {
  if (n < 0) throw std::domain_error("lommel_radial: need n >= 0");
  const double mag = std::max(std::abs(a), std::abs(b));
  if (std::abs(a - b) > 1e-6 * mag && std::abs(a - b) > 0) {
    const auto [jna, jnm1a] = specfun::detail::sph_bessel_j_pair(n, a);
    const auto [jnb, jnm1b] = specfun::detail::sph_bessel_j_pair(n, b);
    return (b * jna * jnm1b - a * jnm1a * jnb) / (a * a - b * b);
  }
  // nearly coincident arguments: the closed form cancels, integrate directly
  static const auto nodes = quadrature::gauss_legendre(64, 0.0, 1.0);
  std::vector<cplx> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i].x;
    terms[i] = nodes[i].w * r * r * sph_bessel_j(n, a * r) * sph_bessel_j(n, b * r);
  }
  return pairwise_sum(terms);
}

cplx lommel_combined(int n, cplx a, cplx b) {
  check_degree(n);
  return a * b / (2.0 * n + 1.0) *
         ((n + 1.0) * lommel_radial(n - 1, a, b) + static_cast<double>(n) * lommel_radial(n + 1, a, b));
}

cplx interior_wavenumber(double k, cplx lambda) {
  if (std::abs(lambda) == 0.0)
    throw std::domain_error("interior wavenumber undefined at lambda = 0");
  const cplx w = 1.0 + 1.0 / lambda;
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw std::domain_error("interior wavenumber hits the sqrt branch cut");
  return k * std::sqrt(w);
}

cplx propagating_phi(ModeFamily family, int n, const WaveContext& ctx, cplx lambda, double t) {
  ctx.validate();
  check_degree(n);
  if (!(t > 0)) throw std::domain_error("propagating function needs t > 0");
  const cplx kl = interior_wavenumber(ctx.k, lambda);
  const double nn1 = root_nn1(n);
  const double k = ctx.k;

  if (t <= 1.0) {
    if (family == ModeFamily::TE) return nn1 * lambda * sph_bessel_j(n, kl * t);
    return kImagUnit * lambda * nn1 / (kl * t) * cal_J(n, kl * t);
  }
  if (family == ModeFamily::TE)
    return kImagUnit * k * k * k * nn1 * sph_hankel1(n, k * t) * lommel_radial(n, k, kl);
  return -k * nn1 / (kl * t) * cal_H(n, k * t) * lommel_combined(n, k, kl);
}

double localization_ratio(ModeFamily family, int n, const WaveContext& ctx,
                          const Eigenmode& mode, double a, int grid) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("localization window needs a in (0,1)");
  if (grid < 256) throw std::domain_error("localization grid must have >= 256 points");
  std::vector<double> mag(grid);
  for (int j = 0; j < grid; ++j) {
    const double t = static_cast<double>(j + 1) / grid;
    mag[j] = std::abs(propagating_phi(family, n, ctx, mode.lambda, t));
  }
  double max_all = 0, max_tail = 0;
  for (int j = 0; j < grid; ++j) {
    max_all = std::max(max_all, mag[j]);
    if (static_cast<double>(j + 1) / grid >= a) max_tail = std::max(max_tail, mag[j]);
  }
  return max_tail / max_all;
}

Vec3c tdk_image_trace(const MultipoleField& field, const WaveContext& ctx, double r,
                      specfun::SphereDirection dir) {
  ctx.validate();
  check_degree(field.n);
  if (field.kind != FieldKind::Interior)
    throw std::domain_error("image trace defined for interior multipoles");
  if (!(r > 1.0)) throw std::domain_error("image trace evaluated outside the unit ball only");

  const cplx kl = field.wavenumber;
  const double k = ctx.k;
  const int n = field.n;
  const double nn1 = root_nn1(n);
  const auto vh = specfun::vector_harmonics({n, field.m}, dir);

  if (field.family == ModeFamily::TE) {
    const cplx coeff =
        kImagUnit * k * k * k * nn1 * sph_hankel1(n, k * r) * lommel_radial(n, k, kl);
    return coeff * vh.U;
  }
  const cplx coeff = -k * nn1 / (kl * r) * cal_H(n, k * r) * lommel_combined(n, k, kl);
  return coeff * vh.V;
}

}  // namespace ballres::modes
