#pragma once

#include <vector>

#include "complexmath.hpp"

namespace ballres::specfun {

// Largest supported order for the radial functions.
inline constexpr int kMaxOrder = 200;

// Spherical Bessel function of the first kind j_n(z), complex argument.
// Downward (Miller) recurrence normalized against the j_0/j_1 closed forms;
// relative accuracy ~1e-12 on |z| <= 300, |Im z| <= 10.
cplx sph_bessel_j(int n, cplx z);

// j_0 .. j_nmax in one downward pass; cheaper than n+1 single calls.
std::vector<cplx> sph_bessel_j_array(int nmax, cplx z);

// j_n'(z) via j_{n-1} - (n+1)/z j_n, with an ascending-series fallback
// near the origin where that expression cancels.
cplx sph_bessel_j_deriv(int n, cplx z);

// Spherical Hankel function of the first kind h_n^{(1)}(z), z != 0.
// Upward recurrence from the h_0, h_1 closed forms.
cplx sph_hankel1(int n, cplx z);
std::vector<cplx> sph_hankel1_array(int nmax, cplx z);
cplx sph_hankel1_deriv(int n, cplx z);

// Riccati-type combinations J_n(z) = j_n(z) + z j_n'(z) = z j_{n-1}(z) - n j_n(z)
// and H_n(z) = h_n^{(1)}(z) + z (h_n^{(1)})'(z).
cplx cal_J(int n, cplx z);
cplx cal_H(int n, cplx z);

struct HarmonicIndex {
  int n = 1;  // degree, >= 1 for vector harmonics (>= 0 for scalar Y)
  int m = 0;  // order, |m| <= n
};

struct SphereDirection {
  double theta = 0;  // polar angle in [0, pi]
  double phi = 0;    // azimuth in [0, 2 pi)
};

Vec3 unit_vector(SphereDirection d);

// Fully normalized spherical harmonic Y_n^m with the Condon-Shortley phase:
// Y_n^m = (-1)^m sqrt((2n+1)(n-m)!/(4 pi (n+m)!)) P_n^m(cos t) e^{i m p},
// Y_n^{-m} = (-1)^m conj(Y_n^m).
cplx sph_harmonic_y(int n, int m, SphereDirection d);

struct VectorHarmonics {
  Vec3c U;  // grad_S Y_n^m / sqrt(n(n+1)), tangential
  Vec3c V;  // xhat x U
  cplx Y;   // scalar Y_n^m
};

// n >= 1 required. U and V are orthonormal over S^2 and mutually orthogonal.
VectorHarmonics vector_harmonics(HarmonicIndex idx, SphereDirection d);

namespace detail {
// j_{-1}(z) = cos(z)/z, needed by the n=0 Lommel closed form.
cplx sph_bessel_j_neg1(cplx z);
// (j_n(z), j_{n-1}(z)) in a single downward pass; n >= 0 (j_{-1} for n = 0).
std::pair<cplx, cplx> sph_bessel_j_pair(int n, cplx z);
}  // namespace detail

}  // namespace ballres::specfun
