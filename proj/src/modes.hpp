#pragma once

#include "complexmath.hpp"
#include "specfun.hpp"
#include "spectrum.hpp"

namespace ballres::modes {

using spectrum::Eigenmode;
using spectrum::ModeFamily;
using spectrum::WaveContext;

enum class FieldKind { Radiating, Interior };  // h_n^{(1)} vs j_n radial factor

struct MultipoleField {
  ModeFamily family = ModeFamily::TE;
  FieldKind kind = FieldKind::Interior;
  int n = 1;
  int m = 0;
  cplx wavenumber{1.0, 0.0};
};

// Electric multipole field value:
//   TE: -sqrt(n(n+1)) b_n(w|x|) V_n^m(xhat)
//   TM: -sqrt(n(n+1))/(i w |x|) B_n(w|x|) U_n^m - n(n+1)/(i w |x|) b_n(w|x|) Y_n^m xhat
// with (b, B) = (j, J) for interior fields and (h^{(1)}, H) for radiating ones.
// Radiating fields are singular at the origin; interior ones are entire
// (TE and TM with n >= 2 vanish at 0, TM n = 1 has a finite nonzero limit).
Vec3c eval_multipole(const MultipoleField& field, Vec3 x);

// Closed-form tangential trace xhat x E on the sphere of radius r:
//   TE:  sqrt(n(n+1)) b_n(w r) U_n^m
//   TM: -sqrt(n(n+1))/(i w r) B_n(w r) V_n^m
Vec3c tangential_trace(const MultipoleField& field, double r, specfun::SphereDirection dir);

// int_0^1 j_n(a r) j_n(b r) r^2 dr = [b j_n(a) j_{n-1}(b) - a j_{n-1}(a) j_n(b)]/(a^2-b^2),
// switching to fixed-order Gauss quadrature when a, b nearly coincide and the
// closed form cancels. n >= 0 (j_{-1} = cos z / z enters at n = 0).
cplx lommel_radial(int n, cplx a, cplx b);

// int_0^1 [n(n+1) j_n(ar) j_n(br) + J_n(ar) J_n(br)] dr
//   = ab/(2n+1) [(n+1) lommel_radial(n-1,a,b) + n lommel_radial(n+1,a,b)], n >= 1.
cplx lommel_combined(int n, cplx a, cplx b);

// k_lambda = k sqrt(1 + 1/lambda), principal branch; domain error when
// 1 + 1/lambda falls on the cut (-inf, 0].
cplx interior_wavenumber(double k, cplx lambda);

// Propagating function phi_n^{lambda,i}(t): the scalar radial coefficient of
// the tangential trace of the eigenfunction (t <= 1) and of its image under
// the volume integral operator (t > 1):
//   TE  t<=1: sqrt(n(n+1)) lambda j_n(k_l t)
//       t> 1: i k^3 sqrt(n(n+1)) h_n^{(1)}(k t) int_0^1 j_n(kr) j_n(k_l r) r^2 dr
//   TM  t<=1: i lambda sqrt(n(n+1)) / (k_l t) J_n(k_l t)
//       t> 1: -k sqrt(n(n+1))/(k_l t) H_n(k t) int_0^1 [J_n J_n + n(n+1) j_n j_n] dr
// Continuous across t = 1 exactly when lambda is an eigenvalue of the family.
cplx propagating_phi(ModeFamily family, int n, const WaveContext& ctx, cplx lambda, double t);

// max_{t in [a,1]} |phi| / max_{t in [0,1]} |phi| over a uniform interior grid
// (first sample at t = 1/grid; the t = 0 limits are 0 for TE and finite for TM).
double localization_ratio(ModeFamily family, int n, const WaveContext& ctx,
                          const Eigenmode& mode, double a, int grid = 2048);

// xhat x T_D^k[E~](x) for an interior multipole with wavenumber k_lambda,
// r = |x| > 1, via the Lommel closed forms (the exterior branch of phi times
// the appropriate vector harmonic).
Vec3c tdk_image_trace(const MultipoleField& field, const WaveContext& ctx, double r,
                      specfun::SphereDirection dir);

}  // namespace ballres::modes
