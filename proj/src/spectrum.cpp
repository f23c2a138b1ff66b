#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace ballres::spectrum {

using specfun::cal_H;
using specfun::cal_J;
using specfun::sph_bessel_j;
using specfun::sph_hankel1;

const char* family_name(ModeFamily f) { return f == ModeFamily::TE ? "te" : "tm"; }

void WaveContext::validate() const {
  if (!(k > 0) || !std::isfinite(k)) throw std::invalid_argument("wave context: need k > 0");
}

namespace {

void check_degree(int n) {
  if (n < 1) throw std::domain_error("mode degree n must be >= 1");
}

struct FamilyConstants {
  cplx hn_k;    // h_n^{(1)}(k)
  cplx calH_k;  // H_n(k)
};

FamilyConstants constants(const WaveContext& ctx, int n) {
  return {sph_hankel1(n, ctx.k), cal_H(n, ctx.k)};
}

}  // namespace

cplx f_n1(const WaveContext& ctx, int n, cplx z) {
  ctx.validate();
  check_degree(n);
  const auto [hnk, calHk] = constants(ctx, n);
  const auto [jn, jnm1] = specfun::detail::sph_bessel_j_pair(n, z);
  const cplx calJ = z * jnm1 - static_cast<double>(n) * jn;
  return hnk * calJ - jn * calHk;
}

cplx f_n2(const WaveContext& ctx, int n, cplx z) {
  ctx.validate();
  check_degree(n);
  if (std::abs(z) == 0.0) throw std::domain_error("f_n^2 singular at z = 0");
  const auto [hnk, calHk] = constants(ctx, n);
  const auto [jn, jnm1] = specfun::detail::sph_bessel_j_pair(n, z);
  const cplx calJ = z * jnm1 - static_cast<double>(n) * jn;
  return (ctx.k * ctx.k) / (z * z) * hnk * calJ - jn * calHk;
}

cplx family_fn(const WaveContext& ctx, ModeFamily family, int n, cplx z) {
  return family == ModeFamily::TE ? f_n1(ctx, n, z) : f_n2(ctx, n, z);
}

double family_fn_scale(const WaveContext& ctx, int n) {
  const auto [hnk, calHk] = constants(ctx, n);
  return std::max({std::abs(hnk), std::abs(calHk), 1.0});
}

std::vector<Eigenmode> compute_modes(const WaveContext& ctx, ModeFamily family,
                                     int n, double re_max, rootscan::ScanConfig cfg) {
  ctx.validate();
  check_degree(n);
  if (!(re_max > ctx.k)) throw std::invalid_argument("compute_modes: need re_max > k");

  cfg.re_max = re_max;
  cfg.re_min = std::min(cfg.re_min, 0.5 * ctx.k);

  const auto [hnk, calHk] = constants(ctx, n);
  const double scale = std::max({std::abs(hnk), std::abs(calHk), 1.0});
  const double k2 = ctx.k * ctx.k;
  const auto scaled_fn = [&, family, n](cplx z) -> cplx {
    if (std::abs(z) == 0.0) return {1e300, 0.0};  // steer Muller off the f_1^2 pole
    const auto [jn, jnm1] = specfun::detail::sph_bessel_j_pair(n, z);
    const cplx calJ = z * jnm1 - static_cast<double>(n) * jn;
    const cplx lead = (family == ModeFamily::TE) ? hnk : k2 / (z * z) * hnk;
    return (lead * calJ - jn * calHk) / scale;
  };

  const auto roots = rootscan::scan_strip(scaled_fn, cfg);

  std::vector<Eigenmode> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    if (r.z.real() <= 0) continue;
    Eigenmode m;
    m.family = family;
    m.n = n;
    m.z = r.z;
    const cplx denom = r.z * r.z - k2;
    m.lambda = k2 / denom;
    m.residual = r.residual;
    // |dlambda/dz| = 2 k^2 |z| / |z^2 - k^2|^2, in units of z-uncertainty
    m.lambda_err = r.residual * 2.0 * k2 * std::abs(r.z) / std::norm(denom);
    m.near_origin = std::abs(r.z) <= ctx.k + 0.5;
    // spurious if lambda collides with the essential spectrum {0, -1/2, -1}
    const bool spurious = std::abs(m.lambda) < 1e-6 ||
                          std::abs(m.lambda + 0.5) < 1e-6 ||
                          std::abs(m.lambda + 1.0) < 1e-6;
    if (spurious) continue;
    out.push_back(m);
  }

  std::sort(out.begin(), out.end(),
            [](const Eigenmode& a, const Eigenmode& b) { return a.z.real() < b.z.real(); });
  int rank = 0;
  for (auto& m : out) m.l = (m.z.real() > ctx.k) ? rank++ : -1;
  return out;
}

double asymptotic_zero(ModeFamily family, int n, int l) {
  check_degree(n);
  if (l < 0) throw std::domain_error("asymptotic zero index l must be >= 0");
  const double slot = (family == ModeFamily::TE) ? (1.0 + 2.0 * l + n) : (2.0 * l + n);
  return slot * M_PI / 2.0;
}

double asymptotic_lambda(const WaveContext& ctx, ModeFamily family, int n, int l) {
  ctx.validate();
  const double zt = asymptotic_zero(family, n, l);
  return ctx.k * ctx.k / (zt * zt);
}

int nearest_asymptotic_index(ModeFamily family, int n, double re_z) {
  check_degree(n);
  const double base = (family == ModeFamily::TE) ? (1.0 + n) : static_cast<double>(n);
  const int l = static_cast<int>(std::lround((2.0 * re_z / M_PI - base) / 2.0));
  return std::max(l, 0);
}

SpectralReport spectral_report(std::span<const Eigenmode> modes) {
  if (modes.empty()) throw std::invalid_argument("spectral_report: empty mode list");
  SpectralReport rep;
  rep.count = modes.size();
  rep.min_abs_lambda = std::abs(modes[0].lambda);
  double running = 0;
  rep.im_lambda_sq_partial.reserve(modes.size());
  for (const auto& m : modes) {
    rep.max_abs_im_z = std::max(rep.max_abs_im_z, std::abs(m.z.imag()));
    rep.max_abs_im_lambda = std::max(rep.max_abs_im_lambda, std::abs(m.lambda.imag()));
    rep.min_abs_lambda = std::min(rep.min_abs_lambda, std::abs(m.lambda));
    running += m.lambda.imag() * m.lambda.imag();
    rep.im_lambda_sq_partial.push_back(running);
    if (m.lambda.imag() <= -1e-13)
      ++rep.positivity_violations;
    else if (m.lambda.imag() < 1e-12)
      ++rep.positivity_warnings;
  }
  // eventually decreasing: monotone over the trailing half of the sequence
  const std::size_t half = modes.size() / 2;
  bool dec = true;
  for (std::size_t i = std::max<std::size_t>(half, 1); i < modes.size(); ++i)
    if (std::abs(modes[i].lambda.imag()) > std::abs(modes[i - 1].lambda.imag()) * (1.0 + 1e-9))
      dec = false;
  rep.abs_im_lambda_eventually_decreasing = dec;
  return rep;
}

}  // namespace ballres::spectrum
