#include "specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace ballres::specfun {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder)
    throw std::domain_error("spherical Bessel order out of supported range [0," +
                            std::to_string(kMaxOrder) + "]");
}

void check_finite(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("non-finite argument to radial special function");
}

bool near_origin(cplx z) { return std::abs(z) < 1e-8; }

// Ascending series of j_n about z = 0, adequate for |z| < ~0.5. Used for tiny
// arguments where recurrences lose digits to cancellation.
cplx series_j(int n, cplx z) {
  // j_n(z) = z^n / (2n+1)!! sum_m (-z^2/2)^m / (m! (2n+3)(2n+5)...(2n+2m+1))
  double dfact = 1.0;
  for (int i = 3; i <= 2 * n + 1; i += 2) dfact *= i;
  cplx zn = 1.0;
  for (int i = 0; i < n; ++i) zn *= z;
  const cplx z2 = -0.5 * z * z;
  cplx term = 1.0, sum = 1.0;
  for (int m = 1; m <= 24; ++m) {
    term *= z2 / (static_cast<double>(m) * (2.0 * n + 2.0 * m + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return zn / dfact * sum;
}

cplx series_j_deriv(int n, cplx z) {
  // termwise derivative of the ascending series
  double dfact = 1.0;
  for (int i = 3; i <= 2 * n + 1; i += 2) dfact *= i;
  const cplx z2 = -0.5 * z * z;
  cplx znm1 = 1.0;  // z^{n-1}
  for (int i = 0; i < n - 1; ++i) znm1 *= z;
  cplx term = 1.0, sum = (n == 0) ? cplx(0.0) : cplx(static_cast<double>(n));
  if (n == 0) {
    // j_0' = -j_1
    return -series_j(1, z);
  }
  for (int m = 1; m <= 24; ++m) {
    term *= z2 / (static_cast<double>(m) * (2.0 * n + 2.0 * m + 1.0));
    sum += static_cast<double>(n + 2 * m) * term;
    if (std::abs(term) * (n + 2 * m) < 1e-18 * std::abs(sum)) break;
  }
  return znm1 / dfact * sum;
}

// Start order for the downward recurrence: past the j/y turning point at
// |z| by a 2|z|^{2/3} + 25 margin, which keeps the contamination from the
// dominant solution below ~1e-14 across the supported box.
int miller_start(int n, cplx z) {
  const double az = std::abs(z);
  return n + static_cast<int>(std::ceil(az + 2.0 * std::cbrt(az * az))) + 25;
}

struct MillerResult {
  cplx value;    // unnormalized f at the requested order
  cplx value_m1; // f one order below (f_{-1} = cos z / z slot for n = 0)
  cplx f0, f1;   // unnormalized f_0, f_1 for normalization
};

// One downward sweep f_{m-1} = (2m+1)/z f_m - f_{m+1}, rescaled whenever the
// magnitude explodes (deep evanescent orders grow factorially on the way down).
MillerResult miller_down(int n, cplx z) {
  const int start = miller_start(n, z);
  cplx fp = 0.0;       // f_{m+1}
  cplx fc = 1e-30;     // f_m
  cplx at_n = 0.0, at_nm1 = 0.0;
  double rescale_after_n = 1.0, rescale_after_nm1 = 1.0;
  const double big = 1e250;
  for (int m = start; m >= 1; --m) {
    cplx fm1 = (2.0 * m + 1.0) / z * fc - fp;
    fp = fc;
    fc = fm1;
    if (m - 1 == n) at_n = fc;
    if (m - 1 == n - 1) at_nm1 = fc;
    if (std::abs(fc.real()) > big || std::abs(fc.imag()) > big) {
      fp *= 1e-250;
      fc *= 1e-250;
      if (m - 1 <= n) rescale_after_n *= 1e-250;
      if (m - 1 <= n - 1) rescale_after_nm1 *= 1e-250;
    }
  }
  // fc = f_0, fp = f_1
  MillerResult r;
  r.f0 = fc;
  r.f1 = fp;
  if (n == 0) {
    r.value = fc;
    rescale_after_n = 1.0;
    // one step below zero: f_{-1} = 1/z f_0 - f_1
    at_nm1 = fc / z - fp;
    rescale_after_nm1 = 1.0;
  }
  r.value = (n == 0) ? fc : at_n * rescale_after_n;
  r.value_m1 = at_nm1 * rescale_after_nm1;
  return r;
}

cplx closed_j0(cplx z) { return std::sin(z) / z; }
cplx closed_j1(cplx z) { return std::sin(z) / (z * z) - std::cos(z) / z; }

}  // namespace

cplx sph_bessel_j(int n, cplx z) {
  check_order(n);
  check_finite(z);
  return detail::sph_bessel_j_pair(n, z).first;
}

std::pair<cplx, cplx> detail::sph_bessel_j_pair(int n, cplx z) {
  if (near_origin(z)) {
    if (std::abs(z) == 0.0) {
      if (n == 0) return {1.0, std::numeric_limits<double>::infinity()};
      return {0.0, n == 1 ? cplx(1.0) : cplx(0.0)};
    }
    return {series_j(n, z), n == 0 ? sph_bessel_j_neg1(z) : series_j(n - 1, z)};
  }
  if (std::abs(z) < 0.5) {
    // series is exact territory; skip the sweep
    return {series_j(n, z), n == 0 ? sph_bessel_j_neg1(z) : series_j(n - 1, z)};
  }
  const MillerResult r = miller_down(n, z);
  // Normalize against whichever of j_0, j_1 is farther from a zero.
  const cplx j0 = closed_j0(z), j1 = closed_j1(z);
  const cplx scale = (std::abs(j0) >= std::abs(j1)) ? j0 / r.f0 : j1 / r.f1;
  return {r.value * scale, r.value_m1 * scale};
}

std::vector<cplx> sph_bessel_j_array(int nmax, cplx z) {
  check_order(nmax);
  check_finite(z);
  std::vector<cplx> out(static_cast<std::size_t>(nmax) + 1);
  if (std::abs(z) < 0.5) {
    for (int n = 0; n <= nmax; ++n) out[n] = (std::abs(z) == 0.0) ? cplx(n == 0 ? 1.0 : 0.0) : series_j(n, z);
    return out;
  }
  const int start = miller_start(nmax, z);
  std::vector<cplx> f(static_cast<std::size_t>(start) + 2, 0.0);
  f[start + 1] = 0.0;
  f[start] = 1e-30;
  for (int m = start; m >= 1; --m) {
    f[m - 1] = (2.0 * m + 1.0) / z * f[m] - f[m + 1];
    if (std::abs(f[m - 1].real()) > 1e250 || std::abs(f[m - 1].imag()) > 1e250) {
      for (int i = m - 1; i <= start + 1; ++i) f[i] *= 1e-250;
    }
  }
  const cplx j0 = closed_j0(z), j1 = closed_j1(z);
  const cplx scale = (std::abs(j0) >= std::abs(j1)) ? j0 / f[0] : j1 / f[1];
  for (int n = 0; n <= nmax; ++n) out[n] = f[n] * scale;
  return out;
}

cplx detail::sph_bessel_j_neg1(cplx z) {
  if (std::abs(z) == 0.0) throw std::domain_error("j_{-1} singular at the origin");
  return std::cos(z) / z;
}

cplx sph_bessel_j_deriv(int n, cplx z) {
  check_order(n);
  check_finite(z);
  if (std::abs(z) < 1e-3) return series_j_deriv(n, z);
  const auto [jn, jnm1] = detail::sph_bessel_j_pair(n, z);
  if (n == 0) return -sph_bessel_j(1, z);
  return jnm1 - (n + 1.0) / z * jn;
}

cplx sph_hankel1(int n, cplx z) {
  check_order(n);
  check_finite(z);
  if (std::abs(z) == 0.0) throw std::domain_error("h_n^{(1)} singular at z = 0");
  const cplx expfac = std::exp(kImagUnit * z);
  cplx hm1 = -kImagUnit * expfac / z;                    // h_0
  if (n == 0) return hm1;
  cplx hc = -expfac * (z + kImagUnit) / (z * z);         // h_1
  for (int m = 1; m < n; ++m) {
    const cplx next = (2.0 * m + 1.0) / z * hc - hm1;
    hm1 = hc;
    hc = next;
  }
  return hc;
}

std::vector<cplx> sph_hankel1_array(int nmax, cplx z) {
  check_order(nmax);
  check_finite(z);
  if (std::abs(z) == 0.0) throw std::domain_error("h_n^{(1)} singular at z = 0");
  std::vector<cplx> out(static_cast<std::size_t>(nmax) + 1);
  const cplx expfac = std::exp(kImagUnit * z);
  out[0] = -kImagUnit * expfac / z;
  if (nmax == 0) return out;
  out[1] = -expfac * (z + kImagUnit) / (z * z);
  for (int m = 1; m < nmax; ++m) out[m + 1] = (2.0 * m + 1.0) / z * out[m] - out[m - 1];
  return out;
}

cplx sph_hankel1_deriv(int n, cplx z) {
  if (n == 0) return -sph_hankel1(1, z);
  return sph_hankel1(n - 1, z) - (n + 1.0) / z * sph_hankel1(n, z);
}

cplx cal_J(int n, cplx z) {
  check_order(n);
  check_finite(z);
  if (std::abs(z) == 0.0) return n == 0 ? cplx(1.0) : cplx(0.0);
  if (std::abs(z) < 1e-3) return series_j(n, z) + z * series_j_deriv(n, z);
  if (n == 0) return std::cos(z);  // j_0 + z j_0' collapses
  const auto [jn, jnm1] = detail::sph_bessel_j_pair(n, z);
  return z * jnm1 - static_cast<double>(n) * jn;
}

cplx cal_H(int n, cplx z) {
  check_order(n);
  check_finite(z);
  if (std::abs(z) == 0.0) throw std::domain_error("H_n singular at z = 0");
  if (n == 0) return std::exp(kImagUnit * z);  // h_0 + z h_0'
  // H_n = z h_{n-1} - n h_n, one upward sweep for the pair
  const cplx expfac = std::exp(kImagUnit * z);
  cplx hm1 = -kImagUnit * expfac / z;
  cplx hc = -expfac * (z + kImagUnit) / (z * z);
  for (int m = 1; m < n; ++m) {
    const cplx next = (2.0 * m + 1.0) / z * hc - hm1;
    hm1 = hc;
    hc = next;
  }
  return z * hm1 - static_cast<double>(n) * hc;
}

Vec3 unit_vector(SphereDirection d) {
  const double st = std::sin(d.theta), ct = std::cos(d.theta);
  return {st * std::cos(d.phi), st * std::sin(d.phi), ct};
}

namespace {

// Normalized associated Legendre values (Condon-Shortley folded in):
// Pb_n^m = (-1)^m sqrt((2n+1)(n-m)!/(4 pi (n+m)!)) P_n^m(cos theta).
// Returns Pb_n^m and Pb_{n-1}^m for the theta-derivative formula.
struct LegendrePair {
  double pnm;
  double pnm_prev;  // degree n-1, zero when n == m
};

LegendrePair normalized_legendre(int n, int m, double x, double s) {
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  for (int i = 1; i <= m; ++i) pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * s;
  if (n == m) return {pmm, 0.0};
  double pprev = pmm;
  double pcur = std::sqrt(2.0 * m + 3.0) * x * pmm;
  if (n == m + 1) return {pcur, pprev};
  for (int l = m + 2; l <= n; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
    const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
    const double next = a * (x * pcur - b * pprev);
    pprev = pcur;
    pcur = next;
  }
  return {pcur, pprev};
}

void check_index(int n, int m, int min_n) {
  if (n < min_n || std::abs(m) > n)
    throw std::domain_error("harmonic index out of range (need |m| <= n, n >= " +
                            std::to_string(min_n) + ")");
}

}  // namespace

cplx sph_harmonic_y(int n, int m, SphereDirection d) {
  check_index(n, m, 0);
  const int ma = std::abs(m);
  const double x = std::cos(d.theta), s = std::sin(d.theta);
  const double pnm = normalized_legendre(n, ma, x, s).pnm;
  cplx val = pnm * std::exp(kImagUnit * (static_cast<double>(ma) * d.phi));
  if (m < 0) val = (ma % 2 == 0 ? 1.0 : -1.0) * std::conj(val);
  return val;
}

VectorHarmonics vector_harmonics(HarmonicIndex idx, SphereDirection d) {
  check_index(idx.n, idx.m, 1);
  const int n = idx.n, ma = std::abs(idx.m);
  const double x = std::cos(d.theta);
  // Poles are a removable coordinate singularity of the (theta,phi) frame;
  // evaluating a hair off the axis keeps every formula finite and costs
  // ~1e-10 absolute.
  const double s = std::max(std::sin(d.theta), 1e-10);

  const auto [pnm, pprev] = normalized_legendre(n, ma, x, s);
  // d/dtheta Pb_n^m = (n x Pb_n^m - c Pb_{n-1}^m)/s
  const double c = std::sqrt((static_cast<double>(n) * n - static_cast<double>(ma) * ma) *
                             (2.0 * n + 1.0) / (2.0 * n - 1.0));
  const double dtheta = (n * x * pnm - c * pprev) / s;
  const double pi_term = ma * pnm / s;

  const cplx eimp = std::exp(kImagUnit * (static_cast<double>(ma) * d.phi));
  const double st = std::sin(d.theta), ct = std::cos(d.theta);
  const double cp = std::cos(d.phi), sp = std::sin(d.phi);
  const Vec3 that{ct * cp, ct * sp, -st};
  const Vec3 phat{-sp, cp, 0.0};

  const double invroot = 1.0 / std::sqrt(static_cast<double>(n) * (n + 1.0));
  // grad_S Y = dY/dtheta that + (im Y / sin theta) phat
  Vec3c U = invroot * ((dtheta * eimp) * to_complex(that) +
                       (kImagUnit * pi_term * eimp) * to_complex(phat));
  cplx Y = pnm * eimp;
  if (idx.m < 0) {
    const double sign = (ma % 2 == 0) ? 1.0 : -1.0;
    U = sign * conj(U);
    Y = sign * std::conj(Y);
  }
  const Vec3 xhat = unit_vector(d);
  return {U, cross(xhat, U), Y};
}

}  // namespace ballres::specfun
