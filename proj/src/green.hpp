#pragma once

#include <span>
#include <stdexcept>

#include "complexmath.hpp"

namespace ballres::green {

// Thrown when a requested contrast sits numerically on a TM n=1 resonance and
// the center-source ball coefficients blow up.
struct ResonanceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown by profile diagnostics (FWHM) when the requested feature is not
// measurable on the sampled range.
struct DiagnosticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContrastContext {
  double k = 1.0;      // free-space wavenumber
  double k_tau = 1.0;  // interior wavenumber k sqrt(1+tau), >= k

  double tau() const { return (k_tau / k) * (k_tau / k) - 1.0; }
  void validate() const;
};

// Free-space Maxwell Green's tensor (I + grad div / k^2) e^{ik|x-y|}/(4 pi |x-y|).
Mat3c green_free(Vec3 x, Vec3 y, double k);

// Im G_0: entire in |x-y|^2, continuous through coincidence where it equals
// (k / 6 pi) I.
Mat3c im_green_free(Vec3 x, Vec3 y, double k);

// Partial sum (degrees 1..N) of the multipole addition formula
//   G_0(x,y,k) = sum_n ik/(n(n+1)) sum_m [E^TM x conj(E~^TM) + E^TE x conj(E~^TE)],
// valid for |x| > |y| (y = 0 collapses to the three TM n=1 terms).
Mat3c addition_series(Vec3 x, Vec3 y, double k, int N);

// Interior correction coefficient of the ball Green's tensor for a center
// dipole with the special polarization:
//   a_0 = [-(k^2/2k_t) H_1(k_t) h_1(k) + (k_t/2) H_1(k) h_1(k_t)]
//         / [(k^2/k_t^2) J_1(k_t) h_1(k) - j_1(k_t) H_1(k)].
// The denominator is f_1^2(k_tau); |f_1^2| < 1e-10 raises ResonanceError.
cplx mie_a0(const ContrastContext& ctx);

// Exterior coefficient of the same 2x2 solve; the field outside the ball is
// b_0 E^TM_{1,0}(k, x). Shares the resonance guard with mie_a0.
cplx ball_b0(const ContrastContext& ctx);

// p = ptilde / |E~_0(k_tau,0)|^2 with ptilde = E~^TM_{1,0}(k_tau,0)/i; real,
// along the z axis, normalized so |p| |E~_0(k_tau,0)| = 1.
Vec3 special_polarization(const ContrastContext& ctx);

// Scalar radial coefficient of xhat x G(x,k)p for the center dipole:
//   phi(k_tau,t) = i/(sqrt(2) t) H_1(k_tau t) - a_0 sqrt(2)/(i k_tau t) J_1(k_tau t).
// Even in t, singular (real part) at t = 0. |t| <= 1 is the ball profile; at
// k_tau = k there is no interface and the formula is the free-space trace for
// every t, which is how the wavelength-wide baseline lobe gets measured.
cplx phi_radial(const ContrastContext& ctx, double t);

// Full width at half maximum of the main lobe of |v| (linear interpolation at
// the two half-crossings around the global maximum). DiagnosticError when a
// crossing is missing inside the sampled range.
double fwhm(std::span<const double> t, std::span<const double> v);

}  // namespace ballres::green
