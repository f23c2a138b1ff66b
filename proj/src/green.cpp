#include "green.hpp"

#include <cmath>

#include "modes.hpp"
#include "specfun.hpp"

namespace ballres::green {

using specfun::cal_H;
using specfun::cal_J;
using specfun::sph_bessel_j;
using specfun::sph_hankel1;

void ContrastContext::validate() const {
  if (!(k > 0) || !std::isfinite(k)) throw std::invalid_argument("contrast: need k > 0");
  if (!(k_tau >= k) || !std::isfinite(k_tau))
    throw std::invalid_argument("contrast: need k_tau >= k (tau >= 0)");
}

Mat3c green_free(Vec3 x, Vec3 y, double k) {
  const Vec3 d = x - y;
  const double r = d.norm();
  if (r < 1e-14) throw std::domain_error("green_free singular at x = y");
  const Vec3 rh = (1.0 / r) * d;
  const cplx ikr = kImagUnit * (k * r);
  const cplx g = std::exp(ikr) / (4.0 * M_PI * r);
  const cplx inv = 1.0 / ikr;            // 1/(ikr)
  const cplx inv2 = inv * inv;           // -1/(kr)^2
  const cplx ci = 1.0 - inv + inv2;      // 1 + i/(kr) - 1/(kr)^2
  const cplx cr = -1.0 + 3.0 * inv - 3.0 * inv2;
  const Mat3c rr = outer(to_complex(rh), to_complex(rh));
  return (g * ci) * identity3() + (g * cr) * rr;
}

Mat3c im_green_free(Vec3 x, Vec3 y, double k) {
  const Vec3 d = x - y;
  const double r = d.norm();
  const double pref = k / (4.0 * M_PI);
  if (r < 1e-10) return (2.0 / 3.0 * pref) * identity3();
  const double u = k * r;
  double a, b;  // coefficients of (I - rr) and rr
  if (u < 1e-3) {
    const double u2 = u * u;
    a = 2.0 / 3.0 - 2.0 / 15.0 * u2;
    b = 2.0 / 3.0 - 1.0 / 15.0 * u2;
  } else {
    const double s = std::sin(u), c = std::cos(u);
    const double sinc = s / u;
    a = sinc + c / (u * u) - s / (u * u * u);
    b = 2.0 * (s / (u * u * u) - c / (u * u));
  }
  const Vec3 rh = (1.0 / r) * d;
  const Mat3c rr = outer(to_complex(rh), to_complex(rh));
  return (pref * a) * (identity3() - rr) + (pref * b) * rr;
}

Mat3c addition_series(Vec3 x, Vec3 y, double k, int N) {
  if (N < 1) throw std::invalid_argument("addition_series: need N >= 1");
  if (!(x.norm() > y.norm()))
    throw std::domain_error("addition_series diverges unless |x| > |y|");
  using modes::FieldKind;
  using modes::MultipoleField;
  using spectrum::ModeFamily;
  std::vector<Mat3c> terms;
  terms.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    Mat3c block;
    for (int m = -n; m <= n; ++m) {
      for (ModeFamily fam : {ModeFamily::TE, ModeFamily::TM}) {
        const MultipoleField rad{fam, FieldKind::Radiating, n, m, k};
        const MultipoleField ent{fam, FieldKind::Interior, n, m, k};
        block = block + outer(modes::eval_multipole(rad, x), conj(modes::eval_multipole(ent, y)));
      }
    }
    terms.push_back((kImagUnit * k / (static_cast<double>(n) * (n + 1.0))) * block);
  }
  Mat3c sum;
  for (const auto& t : terms) sum = sum + t;  // ordered accumulation, N is small
  return sum;
}

namespace {

// Denominator of the a_0 solve; this is f_1^2 evaluated at k_tau.
cplx a0_denominator(const ContrastContext& ctx) {
  const double k = ctx.k, kt = ctx.k_tau;
  return (k * k) / (kt * kt) * cal_J(1, kt) * sph_hankel1(1, k) -
         sph_bessel_j(1, kt) * cal_H(1, k);
}

void resonance_guard(const ContrastContext& ctx, cplx denom) {
  if (std::abs(denom) < 1e-10)
    throw ResonanceError("contrast sits on a TM n=1 resonance (k_tau = " +
                         std::to_string(ctx.k_tau) + ")");
}

}  // namespace

cplx mie_a0(const ContrastContext& ctx) {
  ctx.validate();
  const double k = ctx.k, kt = ctx.k_tau;
  const cplx denom = a0_denominator(ctx);
  resonance_guard(ctx, denom);
  const cplx num = -(k * k) / (2.0 * kt) * cal_H(1, kt) * sph_hankel1(1, k) +
                   kt / 2.0 * cal_H(1, k) * sph_hankel1(1, kt);
  return num / denom;
}

cplx ball_b0(const ContrastContext& ctx) {
  ctx.validate();
  const cplx denom = a0_denominator(ctx);
  resonance_guard(ctx, denom);
  // Cramer numerator collapses through J_1 h_1 - j_1 H_1 = -i/k_tau,
  // leaving b_0 = (-i/2) / ((k_tau/k) f_1^2(k_tau)).
  return (-kImagUnit / 2.0) / (ctx.k_tau / ctx.k * denom);
}

Vec3 special_polarization(const ContrastContext& ctx) {
  ctx.validate();
  const modes::MultipoleField e0{spectrum::ModeFamily::TM, modes::FieldKind::Interior, 1, 0,
                                 ctx.k_tau};
  const Vec3c at0 = modes::eval_multipole(e0, {0, 0, 0});
  const Vec3c pt = (1.0 / kImagUnit) * at0;
  const double n2 = at0.norm() * at0.norm();
  return {pt.x.real() / n2, pt.y.real() / n2, pt.z.real() / n2};
}

cplx phi_radial(const ContrastContext& ctx, double t) {
  ctx.validate();
  if (t == 0.0) throw std::domain_error("phi(k_tau, t) singular at t = 0");
  const cplx a0 = mie_a0(ctx);
  const double rt2 = std::sqrt(2.0);
  const cplx arg = ctx.k_tau * t;
  return kImagUnit / (rt2 * t) * cal_H(1, arg) -
         a0 * rt2 / (kImagUnit * arg) * cal_J(1, arg);
}

double fwhm(std::span<const double> t, std::span<const double> v) {
  if (t.size() != v.size() || t.size() < 3)
    throw std::invalid_argument("fwhm: need matching abscissae/values, >= 3 samples");
  std::size_t ipk = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[ipk])) ipk = i;
  const double half = 0.5 * std::abs(v[ipk]);
  if (half == 0.0) throw DiagnosticError("fwhm: profile is identically zero");

  double left = 0, right = 0;
  bool found_left = false, found_right = false;
  for (std::size_t i = ipk; i-- > 0;) {
    if (std::abs(v[i]) <= half) {
      const double f0 = std::abs(v[i]), f1 = std::abs(v[i + 1]);
      const double w = (half - f0) / (f1 - f0);
      left = t[i] + w * (t[i + 1] - t[i]);
      found_left = true;
      break;
    }
  }
  for (std::size_t i = ipk + 1; i < v.size(); ++i) {
    if (std::abs(v[i]) <= half) {
      const double f0 = std::abs(v[i - 1]), f1 = std::abs(v[i]);
      const double w = (f0 - half) / (f0 - f1);
      right = t[i - 1] + w * (t[i] - t[i - 1]);
      found_right = true;
      break;
    }
  }
  if (!found_left || !found_right)
    throw DiagnosticError("fwhm: main lobe does not reach half maximum inside the sampled range");
  return right - left;
}

}  // namespace ballres::green
