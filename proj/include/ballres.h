/*
 * ballres -- resonances of the electric volume integral operator on the unit
 * dielectric ball, and time-reversal imaging diagnostics built on them.
 *
 * C API over the C++ core: plain functions with out-parameters for scalar
 * evaluations, an opaque handle for computed mode sets, status codes for all
 * failure paths. All functions are thread-safe; handles are immutable after
 * creation and may be shared across threads.
 */

#ifndef BALLRES_H
#define BALLRES_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ballres_status {
  BALLRES_OK = 0,
  BALLRES_ERR_INVALID_ARGUMENT = 1, /* malformed parameters (validation) */
  BALLRES_ERR_DOMAIN = 2,           /* evaluation outside the function's domain */
  BALLRES_ERR_RESONANCE = 3,        /* contrast sits numerically on a resonance */
  BALLRES_ERR_DIAGNOSTIC = 4,       /* requested feature not measurable on the data */
  BALLRES_ERR_INTERNAL = 5
} ballres_status;

typedef struct ballres_complex {
  double re;
  double im;
} ballres_complex;

enum { BALLRES_FAMILY_TE = 0, BALLRES_FAMILY_TM = 1 };

const char* ballres_version(void);
const char* ballres_status_name(ballres_status status);
/* Message for the most recent failure on this thread; valid until the next
 * failing call. Empty string when no failure has occurred. */
const char* ballres_last_error(void);

/* ---- radial special functions (complex argument) ---- */

ballres_status ballres_sph_bessel_j(int n, ballres_complex z, ballres_complex* out);
ballres_status ballres_sph_hankel1(int n, ballres_complex z, ballres_complex* out);
/* J_n(z) = j_n(z) + z j_n'(z) and H_n(z) = h_n^(1)(z) + z (h_n^(1))'(z) */
ballres_status ballres_cal_j(int n, ballres_complex z, ballres_complex* out);
ballres_status ballres_cal_h(int n, ballres_complex z, ballres_complex* out);

/* Characteristic function of the family (TE: f_n^1, TM: f_n^2); its zeros in
 * the right half-plane are the interior resonance wavenumbers. */
ballres_status ballres_char_fn(int family, double k, int n, ballres_complex z,
                               ballres_complex* out);

/* ---- resonance enumeration ---- */

typedef struct ballres_scan_options {
  double re_min;
  double strip_height;  /* zeros searched in |Im z| <= strip_height */
  double seed_spacing;
  double tol;           /* normalized residual acceptance */
  int max_iter;
  double dedupe_radius;
} ballres_scan_options;

void ballres_scan_options_init(ballres_scan_options* opt);

typedef struct ballres_mode {
  int family;
  int n;
  int l;                  /* rank by ascending Re z among zeros with Re z > k; -1 below k */
  ballres_complex z;      /* zero of the characteristic function */
  ballres_complex lambda; /* eigenvalue k^2/(z^2 - k^2) */
  double residual;        /* |f_n^i(z)| / max(|h_n(k)|, |H_n(k)|, 1) */
  double lambda_err;      /* residual propagated through |dlambda/dz| */
  int near_origin;        /* |z| <= k + 0.5: lambda formula near its pole */
  int slot;               /* nearest asymptotic index */
  double zero_gap;        /* |z - zhat(slot)| */
  double lambda_gap;      /* |lambda - lambda_asym(slot)| */
} ballres_mode;

typedef struct ballres_modeset ballres_modeset;

ballres_status ballres_compute_modes(double k, int family, int n, double re_max,
                                     const ballres_scan_options* opt /* NULL: defaults */,
                                     ballres_modeset** out);
size_t ballres_modeset_size(const ballres_modeset* set);
ballres_status ballres_modeset_get(const ballres_modeset* set, size_t index,
                                   ballres_mode* out);
void ballres_modeset_free(ballres_modeset* set);

/* zhat: TE (1+2l+n) pi/2, TM (2l+n) pi/2; lambda_asym = k^2 / zhat^2 */
double ballres_asymptotic_zero(int family, int n, int l);
double ballres_asymptotic_lambda(double k, int family, int n, int l);

/* ---- propagating functions ---- */

/* phi_n^{lambda,i}(t) sampled at the given abscissae (interior t <= 1,
 * exterior t > 1). */
ballres_status ballres_phi_profile(int family, int n, double k, ballres_complex lambda,
                                   const double* t, size_t count, ballres_complex* out);
/* Relative jump of phi across t = 1; ~0 exactly when lambda is an eigenvalue. */
ballres_status ballres_phi_continuity(int family, int n, double k, ballres_complex lambda,
                                      double* out_rel_jump);

/* ---- center-dipole ball Green's tensor ---- */

ballres_status ballres_mie_a0(double k, double k_tau, ballres_complex* out);
/* Radial trace coefficient phi(k_tau, t); t != 0. For k_tau = k this is the
 * free-space trace, valid for every t (the wavelength-wide baseline). */
ballres_status ballres_phi_radial(double k, double k_tau, const double* t, size_t count,
                                  ballres_complex* out);
/* Full width at half maximum of the main lobe of |value| over the profile. */
ballres_status ballres_fwhm(const double* t, const double* value, size_t count,
                            double* out_width);

/* ---- time-reversal imaging ---- */

ballres_status ballres_hk_residual(const double x[3], const double z[3], const double p[3],
                                   const double q[3], double k, double radius, int quad_order,
                                   double* out);
/* Synthesizes dipole data (source z0, polarization p) on the measurement
 * sphere and back-propagates onto the given points (3*count coordinates).
 * out_qI receives q . I(z); out_ref (optional, may be NULL) receives the
 * reference (1/k) q . Im G_0(z, z0) p. */
ballres_status ballres_imaging_line(const double z0[3], const double p[3], const double q[3],
                                    double k, double radius, int quad_order,
                                    const double* points, size_t count,
                                    ballres_complex* out_qI, double* out_ref);

/* ---- selfcheck ---- */

enum { BALLRES_FAULT_NONE = 0, BALLRES_FAULT_CALJ_SIGN = 1 };

/* Runs every module invariant suite. *out_report receives a malloc'd text or
 * JSON report (free with ballres_string_free); *out_pass is 1/0. Returns
 * BALLRES_OK even when checks fail -- the verdict is in *out_pass. */
ballres_status ballres_selfcheck(int quick, int fault, int as_json, char** out_report,
                                 int* out_pass);
void ballres_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BALLRES_H */
