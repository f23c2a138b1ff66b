#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <stdexcept>
#include <vector>

namespace oracles {

namespace {

using mpc = boost::multiprecision::cpp_complex_100;
using mpf = mpc::value_type;

mpc to_mp(cplx z) { return {mpf(z.real()), mpf(z.imag())}; }
cplx to_double(const mpc& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Ascending series: j_n(z) = z^n/(2n+1)!! sum_m (-z^2/2)^m / (m! prod(2n+2j+1)).
// ~0.43 |z| digits cancel, so the 100-digit budget is safe for |z| <= ~120.
mpc series_j_mp(int n, const mpc& z) {
  mpf dfact = 1;
  for (int i = 3; i <= 2 * n + 1; i += 2) dfact *= i;
  mpc zn = 1;
  for (int i = 0; i < n; ++i) zn *= z;
  const mpc z2 = -z * z / 2;
  mpc term = 1, sum = 1;
  for (int m = 1; m <= 5000; ++m) {
    term *= z2 / (mpf(m) * mpf(2 * n + 2 * m + 1));
    sum += term;
    if (abs(term) < 1e-60 * abs(sum)) break;
  }
  return zn / dfact * sum;
}

// Rayleigh closed form (finite sum): stable above the order where the series
// cancellation would bite, with the multiprecision guard absorbing the large
// intermediate coefficients near n ~ |z|.
mpc closed_j_mp(int n, const mpc& z) {
  // a_j = (n+j)! / (2^j j! (n-j)!)
  std::vector<mpf> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int j = 1; j <= n; ++j)
    a[j] = a[j - 1] * mpf((n + j) * (n - j + 1)) / mpf(2 * j);
  const mpc arg = z - mpf(n) * boost::math::constants::pi<mpf>() / 2;
  const mpc s = sin(arg), c = cos(arg);
  mpc even = 0, odd = 0, zpow = 1;
  for (int j = 0; j <= n; ++j) {
    const int m = j / 2;
    const mpf sign = (m % 2 == 0) ? 1 : -1;
    if (j % 2 == 0)
      even += sign * a[j] / zpow;
    else
      odd += sign * a[j] / zpow;
    zpow *= z;
  }
  return (s * even + c * odd) / z;
}

mpc hankel_mp(int n, const mpc& z) {
  // h_n^{(1)}(z) = (-i)^{n+1} e^{iz}/z sum_j (n+j)!/(j!(n-j)!) (-2iz)^{-j}
  const mpc I{0, 1};
  mpc coef = 1, sum = 0, denom = 1;
  const mpc m2iz = mpc(0, -2) * z;
  for (int j = 0; j <= n; ++j) {
    sum += coef / denom;
    coef *= mpf((n + j + 1) * (n - j));
    coef /= mpf(j + 1);
    denom *= m2iz;
  }
  mpc front = exp(I * z) / z;
  for (int j = 0; j < n + 1; ++j) front *= -I;
  return front * sum;
}

mpc j_mp(int n, const mpc& z) {
  const double az = static_cast<double>(abs(z));
  if (az == 0.0) return n == 0 ? mpc(1) : mpc(0);
  // series below/near the order, closed form in the oscillatory regime
  if (az <= std::max(12.0, 1.0 * n)) return series_j_mp(n, z);
  return closed_j_mp(n, z);
}

}  // namespace

cplx ref_sph_bessel_j(int n, cplx z) { return to_double(j_mp(n, to_mp(z))); }

cplx ref_sph_hankel1(int n, cplx z) {
  if (std::abs(z) == 0.0) throw std::domain_error("hankel oracle: z = 0");
  return to_double(hankel_mp(n, to_mp(z)));
}

cplx ref_cal_J(int n, cplx z) {
  const mpc zz = to_mp(z);
  if (n == 0) return to_double(cos(zz));
  return to_double(zz * j_mp(n - 1, zz) - mpf(n) * j_mp(n, zz));
}

cplx ref_cal_H(int n, cplx z) {
  const mpc zz = to_mp(z);
  if (n == 0) return to_double(exp(mpc(0, 1) * zz));
  return to_double(zz * hankel_mp(n - 1, zz) - mpf(n) * hankel_mp(n, zz));
}

cplx ref_sph_bessel_j_deriv(int n, cplx z) {
  const mpc zz = to_mp(z);
  if (n == 0) return to_double(-j_mp(1, zz));
  if (std::abs(z) == 0.0) return n == 1 ? cplx(1.0 / 3.0) : cplx(0.0);
  return to_double(j_mp(n - 1, zz) - mpf(n + 1) / zz * j_mp(n, zz));
}

cplx integrate(const std::function<cplx(double)>& f, double a, double b) {
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double re = gk::integrate([&](double x) { return f(x).real(); }, a, b, 12, 1e-13);
  const double im = gk::integrate([&](double x) { return f(x).imag(); }, a, b, 12, 1e-13);
  return {re, im};
}

namespace {
constexpr double kD1[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
constexpr double kD2[7] = {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
}  // namespace

Vec3c fd_curl_curl(const std::function<Vec3c(Vec3)>& field, Vec3 x, double h) {
  // curl curl E = grad(div E) - Lap E, all second partials from 6th-order stencils
  auto shift = [&](int axis, int step) {
    Vec3 y = x;
    (axis == 0 ? y.x : axis == 1 ? y.y : y.z) += step * h;
    return y;
  };
  // second partial d^2 E / da db
  auto dd = [&](int a, int b) -> Vec3c {
    if (a == b) {
      Vec3c acc{};
      for (int s = -3; s <= 3; ++s) acc = acc + cplx(kD2[s + 3]) * field(shift(a, s));
      return (cplx(1.0 / (h * h))) * acc;
    }
    Vec3c acc{};
    for (int sa = -3; sa <= 3; ++sa) {
      if (kD1[sa + 3] == 0.0) continue;
      Vec3c inner{};
      for (int sb = -3; sb <= 3; ++sb) {
        if (kD1[sb + 3] == 0.0) continue;
        Vec3 y = shift(a, sa);
        (b == 0 ? y.x : b == 1 ? y.y : y.z) += sb * h;
        inner = inner + cplx(kD1[sb + 3]) * field(y);
      }
      acc = acc + cplx(kD1[sa + 3]) * inner;
    }
    return (cplx(1.0 / (h * h))) * acc;
  };

  Vec3c hess[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      hess[a][b] = dd(a, b);
      hess[b][a] = hess[a][b];
    }
  auto comp = [](const Vec3c& v, int i) { return i == 0 ? v.x : i == 1 ? v.y : v.z; };
  Vec3c out;
  for (int i = 0; i < 3; ++i) {
    // (grad div E)_i = sum_j d_i d_j E_j ; (Lap E)_i = sum_j d_j d_j E_i
    cplx gd = 0, lap = 0;
    for (int j = 0; j < 3; ++j) {
      gd += comp(hess[i][j], j);
      lap += comp(hess[j][j], i);
    }
    (i == 0 ? out.x : i == 1 ? out.y : out.z) = gd - lap;
  }
  return out;
}

cplx fd_deriv(const std::function<cplx(cplx)>& f, cplx z, double h) {
  cplx acc = 0;
  for (int s = -3; s <= 3; ++s) acc += kD1[s + 3] * f(z + cplx(s * h, 0.0));
  return acc / h;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope: bad data");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracles
