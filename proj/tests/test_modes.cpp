#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "green.hpp"
#include "modes.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

using namespace ballres;
using namespace ballres::modes;
using doctest::Approx;

namespace {

const WaveContext kCtx{1.0};

// Brute-force image of an interior multipole under the volume integral
// operator, evaluated outside the ball where the kernel is smooth:
// T[E~](x) = k^2 int_B G_0(x,y,k) E~(y) dy, by radial Gauss-Legendre times a
// sphere product rule. Completely independent of the Lommel pipeline.
Vec3c tdk_volume_oracle(const MultipoleField& field, double k, Vec3 x, int sphere_degree,
                        cplx data_scale = 1.0) {
  const auto radial = quadrature::gauss_legendre(48, 0.0, 1.0);
  const auto sphere = quadrature::sphere_rule(sphere_degree);
  Vec3c acc{};
  for (const auto& rn : radial) {
    for (const auto& sn : sphere) {
      const Vec3 y = rn.x * specfun::unit_vector(sn.dir);
      const double w = rn.w * rn.x * rn.x * sn.weight;
      const Vec3c ev = data_scale * eval_multipole(field, y);
      acc = acc + cplx(w) * (green::green_free(x, y, k) * ev);
    }
  }
  return cplx(k * k) * acc;
}

}  // namespace

TEST_CASE("interior multipoles at the origin") {
  for (int n : {1, 2, 3})
    for (int m = -n; m <= n; ++m) {
      const Vec3c te = eval_multipole({ModeFamily::TE, FieldKind::Interior, n, m, {2.0, 0.0}},
                                      {0, 0, 0});
      CHECK(te.norm() == 0.0);
    }
  // TM n=1 has a finite nonzero limit, independent of the wavenumber
  const Vec3c a =
      eval_multipole({ModeFamily::TM, FieldKind::Interior, 1, 0, {2.0, 0.0}}, {0, 0, 0});
  const Vec3c b =
      eval_multipole({ModeFamily::TM, FieldKind::Interior, 1, 0, {5.0, 1.0}}, {0, 0, 0});
  CHECK(a.norm() > 0.1);
  CHECK((a - b).norm() < 1e-12);
  // and matches the evaluation just off the origin
  const Vec3c c = eval_multipole({ModeFamily::TM, FieldKind::Interior, 1, 0, {2.0, 0.0}},
                                 {7e-5, -3e-5, 5e-5});
  CHECK((a - c).norm() < 1e-7);
  // TM n=2 vanishes
  const Vec3c d =
      eval_multipole({ModeFamily::TM, FieldKind::Interior, 2, 1, {2.0, 0.0}}, {0, 0, 0});
  CHECK(d.norm() == 0.0);

  CHECK_THROWS_AS(
      eval_multipole({ModeFamily::TE, FieldKind::Radiating, 1, 0, {1.0, 0.0}}, {0, 0, 0}),
      std::domain_error);
}

TEST_CASE("multipoles solve curl curl E = w^2 E") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> coord(-0.9, 0.9);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 20; ++trial) {
    const Vec3 x{coord(rng), coord(rng), coord(rng)};
    if (x.norm() < 0.35) continue;  // keep the FD stencil away from the origin/poles
    const int n = 1 + trial % 4;
    const int m = (trial % (2 * n + 1)) - n;
    const ModeFamily fam = (trial % 2) ? ModeFamily::TE : ModeFamily::TM;
    const FieldKind kind = (trial % 3) ? FieldKind::Interior : FieldKind::Radiating;
    const cplx w{1.4, (trial % 5) * 0.05};
    const MultipoleField field{fam, kind, n, m, w};
    const auto f = [&](Vec3 p) { return eval_multipole(field, p); };
    const Vec3c cc = oracles::fd_curl_curl(f, x, 0.004);
    const Vec3c want = (w * w) * eval_multipole(field, x);
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(x.norm());
    CHECK((cc - want).norm() <= 1e-4 * std::max(want.norm(), 1e-6));
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("tangential trace: closed form equals xhat x field") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> th(0.05, M_PI - 0.05), ph(0.0, 2.0 * M_PI),
      rr(0.2, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const specfun::SphereDirection d{th(rng), ph(rng)};
    const double r = rr(rng);
    const int n = 1 + trial % 5;
    const int m = (trial % (2 * n + 1)) - n;
    const ModeFamily fam = (trial % 2) ? ModeFamily::TE : ModeFamily::TM;
    const FieldKind kind = (trial % 3) ? FieldKind::Interior : FieldKind::Radiating;
    const MultipoleField field{fam, kind, n, m, {1.7, 0.1}};
    const Vec3 x = r * specfun::unit_vector(d);
    const Vec3c direct = cross(specfun::unit_vector(d), eval_multipole(field, x));
    const Vec3c closed = tangential_trace(field, r, d);
    CHECK((direct - closed).norm() <= 1e-10 * std::max(1.0, closed.norm()));
    CHECK(std::abs(dot(specfun::unit_vector(d), closed)) < 1e-12 * std::max(1.0, closed.norm()));
  }
}

TEST_CASE("TE trace coefficient is sqrt(n(n+1)) j_n(wr)") {
  const MultipoleField field{ModeFamily::TE, FieldKind::Interior, 2, 1, {3.0, 0.0}};
  const specfun::SphereDirection d{1.1, 0.7};
  const auto vh = specfun::vector_harmonics({2, 1}, d);
  const Vec3c tr = tangential_trace(field, 1.0, d);
  const cplx coeff = std::sqrt(6.0) * specfun::sph_bessel_j(2, {3.0, 0.0});
  CHECK((tr - coeff * vh.U).norm() < 1e-12);
}

TEST_CASE("Lommel radial closed form against adaptive quadrature") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> mag(0.5, 50.0), im(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 20;
    const cplx a{mag(rng), im(rng)};
    const cplx b{mag(rng), im(rng)};
    const cplx got = lommel_radial(n, a, b);
    const cplx want = oracles::integrate(
        [&](double r) {
          return specfun::sph_bessel_j(n, a * r) * specfun::sph_bessel_j(n, b * r) * (r * r);
        },
        0.0, 1.0);
    CAPTURE(n);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(std::abs(got - want) <= 1e-8 * std::max(std::abs(want), 1e-12));
  }
}

TEST_CASE("Lommel radial degenerate branch a = b") {
  for (const cplx a : {cplx{3.0, 0.5}, cplx{20.0, -1.0}, cplx{47.0, 0.0}}) {
    for (int n : {1, 4, 9}) {
      const cplx got = lommel_radial(n, a, a);
      const cplx want = oracles::integrate(
          [&](double r) {
            const cplx j = specfun::sph_bessel_j(n, a * r);
            return j * j * (r * r);
          },
          0.0, 1.0);
      CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
    }
  }
  // continuity across the threshold: a ~ b within epsilon
  const cplx a{10.0, 0.0};
  CHECK(std::abs(lommel_radial(2, a, a + 1e-8) - lommel_radial(2, a, a)) < 1e-9);
}

TEST_CASE("Lommel radial small-argument limit: n=1, a=b->0 gives a^2/45") {
  // leading term of int (ar/3)(ar/3) r^2 dr, with an O(a^2) relative defect
  const cplx a{1e-3, 0.0};
  const cplx v = lommel_radial(1, a, a);
  CHECK(std::abs(v - a * a / 45.0) < 1e-5 * std::abs(a * a / 45.0));
}

TEST_CASE("Lommel combined: defining integrand and symmetry") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> mag(0.5, 30.0), im(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 15;
    const cplx a{mag(rng), im(rng)};
    const cplx b{mag(rng), im(rng)};
    const cplx got = lommel_combined(n, a, b);
    const cplx want = oracles::integrate(
        [&](double r) {
          return static_cast<double>(n) * (n + 1.0) * specfun::sph_bessel_j(n, a * r) *
                     specfun::sph_bessel_j(n, b * r) +
                 specfun::cal_J(n, a * r) * specfun::cal_J(n, b * r);
        },
        0.0, 1.0);
    CAPTURE(n);
    CHECK(std::abs(got - want) <= 1e-8 * std::max(std::abs(want), 1e-12));
    CHECK(std::abs(got - lommel_combined(n, b, a)) <= 1e-12 * std::abs(got));
  }
}

TEST_CASE("interior wavenumber: principal branch round trip and cut") {
  const cplx z{7.5944, -0.1325};
  const cplx lambda = kCtx.k * kCtx.k / (z * z - kCtx.k * kCtx.k);
  CHECK(std::abs(interior_wavenumber(kCtx.k, lambda) - z) < 1e-12 * std::abs(z));
  CHECK_THROWS_AS(interior_wavenumber(1.0, cplx{-0.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(interior_wavenumber(1.0, cplx{0.0, 0.0}), std::domain_error);
}

TEST_CASE("propagating function is continuous at t=1 exactly at eigenvalues") {
  // TM n=1: the four reported resonances; TE n=5: first two
  const auto tm = spectrum::compute_modes(kCtx, ModeFamily::TM, 1, 18.0);
  const auto te = spectrum::compute_modes(kCtx, ModeFamily::TE, 5, 14.0);
  int verified = 0;
  auto check_mode = [&](ModeFamily fam, int n, const spectrum::Eigenmode& m) {
    const cplx lo = propagating_phi(fam, n, kCtx, m.lambda, 1.0);
    const cplx hi = propagating_phi(fam, n, kCtx, m.lambda, 1.0 + 1e-12);
    CAPTURE(family_name(fam));
    CAPTURE(m.z);
    CHECK(std::abs(lo - hi) <= 1e-6 * std::max(std::abs(lo), 1.0));
    ++verified;
  };
  for (const auto& m : tm)
    if (m.l >= 0 && m.z.real() > 7.0) check_mode(ModeFamily::TM, 1, m);
  for (const auto& m : te)
    if (m.l >= 0) check_mode(ModeFamily::TE, 5, m);
  CHECK(verified >= 5);

  // and visibly discontinuous away from an eigenvalue
  const cplx off{0.02, 0.001};
  const cplx lo = propagating_phi(ModeFamily::TM, 1, kCtx, off, 1.0);
  const cplx hi = propagating_phi(ModeFamily::TM, 1, kCtx, off, 1.0 + 1e-12);
  CHECK(std::abs(lo - hi) > 1e-3 * std::abs(lo));
}

TEST_CASE("propagating function domain errors") {
  CHECK_THROWS_AS(propagating_phi(ModeFamily::TM, 1, kCtx, cplx{0.1, 0.01}, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(propagating_phi(ModeFamily::TE, 1, kCtx, cplx{-0.5, 0.0}, 0.5),
                  std::domain_error);
}

TEST_CASE("large-n decay of phi_n^{lambda,1}(2): super-geometric with shrinking ratios") {
  const cplx lambda{0.04, 0.01};
  std::vector<double> mags;
  for (int n = 5; n <= 25; ++n)
    mags.push_back(std::abs(propagating_phi(ModeFamily::TE, n, kCtx, lambda, 2.0)));
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < mags.size(); ++i) ratios.push_back(mags[i + 1] / mags[i]);
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) CHECK(ratios[i + 1] < ratios[i]);
  CHECK(ratios.front() < 1.0);
}

TEST_CASE("localization: ratio * l stays banded as l grows") {
  for (auto [fam, n] : {std::pair{ModeFamily::TM, 1}, {ModeFamily::TE, 5}}) {
    const double re_max = spectrum::asymptotic_zero(fam, n, 42) + 2.0;
    const auto ms = spectrum::compute_modes(kCtx, fam, n, re_max);
    std::vector<double> products;
    for (int l : {5, 10, 20, 40}) {
      for (const auto& m : ms)
        if (m.l == l) products.push_back(localization_ratio(fam, n, kCtx, m, 0.5) * l);
    }
    REQUIRE(products.size() == 4);
    const double c = products[0];
    for (double p : products) {
      CAPTURE(family_name(fam));
      CAPTURE(n);
      CHECK(p > c / 3.0);
      CHECK(p < 3.0 * c);
    }
  }
}

TEST_CASE("localization ratio basics") {
  const auto ms = spectrum::compute_modes(kCtx, ModeFamily::TE, 1, 20.0);
  REQUIRE(!ms.empty());
  const auto& m = ms.back();
  const double full = localization_ratio(ModeFamily::TE, 1, kCtx, m, 1e-9, 512);
  CHECK(full == Approx(1.0));
  const double half = localization_ratio(ModeFamily::TE, 1, kCtx, m, 0.5, 512);
  CHECK(half > 0.0);
  CHECK(half <= 1.0);
  CHECK_THROWS_AS(localization_ratio(ModeFamily::TE, 1, kCtx, m, 1.5, 512), std::domain_error);
  CHECK_THROWS_AS(localization_ratio(ModeFamily::TE, 1, kCtx, m, 0.5, 100), std::domain_error);
}

TEST_CASE("operator image trace: Lommel pipeline against volume quadrature") {
  const double r = 2.5;
  const specfun::SphereDirection dir{1.15, 0.6};
  const Vec3 x = r * specfun::unit_vector(dir);
  for (int n = 1; n <= 4; ++n) {
    for (ModeFamily fam : {ModeFamily::TE, ModeFamily::TM}) {
      const int m = (n >= 2) ? 1 : 0;
      const MultipoleField field{fam, FieldKind::Interior, n, m, {5.2, -0.1}};
      const Vec3c closed = tdk_image_trace(field, kCtx, r, dir);
      const Vec3c volume = tdk_volume_oracle(field, kCtx.k, x, 2 * n + 14);
      const Vec3c vt = cross(specfun::unit_vector(dir), volume);
      CAPTURE(n);
      CAPTURE(family_name(fam));
      CHECK((vt - closed).norm() <= 1e-5 * std::max(closed.norm(), 1e-12));
    }
  }
}

TEST_CASE("operator image is linear and lands on the right harmonic") {
  const MultipoleField field{ModeFamily::TE, FieldKind::Interior, 2, -1, {4.0, 0.0}};
  const specfun::SphereDirection dir{0.9, 2.1};
  const Vec3 x = 2.0 * specfun::unit_vector(dir);
  const cplx scale{2.0, 0.5};
  const Vec3c one = tdk_volume_oracle(field, kCtx.k, x, 18);
  const Vec3c two = tdk_volume_oracle(field, kCtx.k, x, 18, scale);
  CHECK((two - scale * one).norm() <= 1e-12 * two.norm());

  // TE image is a complex multiple of U, TM image of V (projection residual)
  const auto vh = specfun::vector_harmonics({2, -1}, dir);
  const Vec3c te = tdk_image_trace(field, kCtx, 2.0, dir);
  const cplx cu = dot(conj(vh.U), te) / dot(conj(vh.U), vh.U);
  CHECK((te - cu * vh.U).norm() < 1e-12 * te.norm());
  const MultipoleField tm{ModeFamily::TM, FieldKind::Interior, 2, -1, {4.0, 0.0}};
  const Vec3c tmv = tdk_image_trace(tm, kCtx, 2.0, dir);
  const cplx cv = dot(conj(vh.V), tmv) / dot(conj(vh.V), vh.V);
  CHECK((tmv - cv * vh.V).norm() < 1e-12 * tmv.norm());

  CHECK_THROWS_AS(tdk_image_trace(field, kCtx, 0.9, dir), std::domain_error);
  const MultipoleField rad{ModeFamily::TE, FieldKind::Radiating, 2, -1, {4.0, 0.0}};
  CHECK_THROWS_AS(tdk_image_trace(rad, kCtx, 2.0, dir), std::domain_error);
}
