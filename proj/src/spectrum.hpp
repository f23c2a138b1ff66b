#pragma once

#include <span>
#include <vector>

#include "complexmath.hpp"
#include "rootscan.hpp"

namespace ballres::spectrum {

enum class ModeFamily { TE, TM };  // zeros of f_n^1 resp. f_n^2

const char* family_name(ModeFamily f);

struct WaveContext {
  double k = 1.0;  // free-space wavenumber, ball radius 1

  void validate() const;
};

// Characteristic functions whose zeros z (interior wavenumbers) are the
// resonances:
//   f_n^1(z) = h_n^{(1)}(k) J_n(z) - j_n(z) H_n(k)
//   f_n^2(z) = (k^2/z^2) h_n^{(1)}(k) J_n(z) - j_n(z) H_n(k)
// f_n^2 has a simple pole at z = 0 (n = 1), otherwise both are entire.
cplx f_n1(const WaveContext& ctx, int n, cplx z);
cplx f_n2(const WaveContext& ctx, int n, cplx z);
cplx family_fn(const WaveContext& ctx, ModeFamily family, int n, cplx z);

// max(|h_n(k)|, |H_n(k)|, 1): natural magnitude of f_n^i, used to normalize
// residuals (raw |f| floors scale with the Hankel factors, ~(2n-1)!!/k^{n+1}).
double family_fn_scale(const WaveContext& ctx, int n);

struct Eigenmode {
  ModeFamily family = ModeFamily::TE;
  int n = 1;
  int l = 0;          // rank by ascending Re z among zeros with Re z > k
  cplx z;             // zero of f_n^i == interior wavenumber at resonance
  cplx lambda;        // k^2 / (z^2 - k^2)
  double residual = 0;    // |f_n^i(z)| / family_fn_scale
  double lambda_err = 0;  // residual propagated through |dlambda/dz|
  bool near_origin = false;  // |z| <= k + 0.5: lambda formula near its pole
};

// Scans the right half-plane strip for zeros of the family function and maps
// them to eigenvalues. l ranks the zeros with Re z > k by ascending Re z;
// zeros with |z| <= k + 0.5 are kept but flagged (and get l = -1).
// Eigenvalues within 1e-6 of the essential-spectrum points {0,-1/2,-1} are
// dropped as spurious.
std::vector<Eigenmode> compute_modes(const WaveContext& ctx, ModeFamily family,
                                     int n, double re_max,
                                     rootscan::ScanConfig cfg = {});

// Leading-order zero locations: TE (1+2l+n) pi/2, TM (2l+n) pi/2.
double asymptotic_zero(ModeFamily family, int n, int l);

// Matching eigenvalue asymptotics 4k^2/((1+2l+n)^2 pi^2) resp. 4k^2/((2l+n)^2 pi^2).
double asymptotic_lambda(const WaveContext& ctx, ModeFamily family, int n, int l);

// Index of the asymptotic zero nearest to re_z (clamped at 0). The figure
// captions and the rank index need not agree at low l, so asymptotic laws are
// checked against the nearest slot.
int nearest_asymptotic_index(ModeFamily family, int n, double re_z);

struct SpectralReport {
  std::size_t count = 0;
  double max_abs_im_z = 0;
  double max_abs_im_lambda = 0;
  std::vector<double> im_lambda_sq_partial;  // partial sums of |Im lambda|^2 in l order
  int positivity_violations = 0;             // Im lambda <= -1e-13
  int positivity_warnings = 0;               // Im lambda in (-1e-13, 1e-12)
  bool abs_im_lambda_eventually_decreasing = false;
  double min_abs_lambda = 0;
};

SpectralReport spectral_report(std::span<const Eigenmode> modes);

}  // namespace ballres::spectrum
