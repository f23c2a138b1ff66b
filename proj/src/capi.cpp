#include "ballres.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "green.hpp"
#include "imaging.hpp"
#include "modes.hpp"
#include "rootscan.hpp"
#include "selfcheck.hpp"
#include "specfun.hpp"
#include "spectrum.hpp"

using namespace ballres;

namespace {

thread_local std::string g_last_error;

ballres_status fail(ballres_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

// Exception-to-status bridge shared by every entry point.
template <typename Fn>
ballres_status guarded(Fn&& fn) {
  try {
    fn();
    return BALLRES_OK;
  } catch (const green::ResonanceError& e) {
    return fail(BALLRES_ERR_RESONANCE, e.what());
  } catch (const green::DiagnosticError& e) {
    return fail(BALLRES_ERR_DIAGNOSTIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BALLRES_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(BALLRES_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(BALLRES_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BALLRES_ERR_INTERNAL, "unknown error");
  }
}

cplx from_c(ballres_complex z) { return {z.re, z.im}; }
ballres_complex to_c(cplx z) { return {z.real(), z.imag()}; }

spectrum::ModeFamily family_from(int family) {
  if (family != BALLRES_FAMILY_TE && family != BALLRES_FAMILY_TM)
    throw std::invalid_argument("family must be BALLRES_FAMILY_TE or BALLRES_FAMILY_TM");
  return family == BALLRES_FAMILY_TE ? spectrum::ModeFamily::TE : spectrum::ModeFamily::TM;
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

struct ballres_modeset {
  std::vector<ballres_mode> modes;
};

extern "C" {

const char* ballres_version(void) { return "1.0.0"; }

const char* ballres_status_name(ballres_status status) {
  switch (status) {
    case BALLRES_OK: return "ok";
    case BALLRES_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BALLRES_ERR_DOMAIN: return "domain error";
    case BALLRES_ERR_RESONANCE: return "resonance singularity";
    case BALLRES_ERR_DIAGNOSTIC: return "diagnostic not measurable";
    case BALLRES_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ballres_last_error(void) { return g_last_error.c_str(); }

ballres_status ballres_sph_bessel_j(int n, ballres_complex z, ballres_complex* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_c(specfun::sph_bessel_j(n, from_c(z)));
  });
}

ballres_status ballres_sph_hankel1(int n, ballres_complex z, ballres_complex* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_c(specfun::sph_hankel1(n, from_c(z)));
  });
}

ballres_status ballres_cal_j(int n, ballres_complex z, ballres_complex* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_c(specfun::cal_J(n, from_c(z)));
  });
}

ballres_status ballres_cal_h(int n, ballres_complex z, ballres_complex* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_c(specfun::cal_H(n, from_c(z)));
  });
}

ballres_status ballres_char_fn(int family, double k, int n, ballres_complex z,
                               ballres_complex* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_c(spectrum::family_fn({k}, family_from(family), n, from_c(z)));
  });
}

void ballres_scan_options_init(ballres_scan_options* opt) {
  if (!opt) return;
  const rootscan::ScanConfig cfg;
  opt->re_min = cfg.re_min;
  opt->strip_height = cfg.strip_height;
  opt->seed_spacing = cfg.seed_spacing;
  opt->tol = cfg.tol;
  opt->max_iter = cfg.max_iter;
  opt->dedupe_radius = cfg.dedupe_radius;
}

ballres_status ballres_compute_modes(double k, int family, int n, double re_max,
                                     const ballres_scan_options* opt, ballres_modeset** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    rootscan::ScanConfig cfg;
    if (opt) {
      cfg.re_min = opt->re_min;
      cfg.strip_height = opt->strip_height;
      cfg.seed_spacing = opt->seed_spacing;
      cfg.tol = opt->tol;
      cfg.max_iter = opt->max_iter;
      cfg.dedupe_radius = opt->dedupe_radius;
    }
    const spectrum::WaveContext ctx{k};
    const auto fam = family_from(family);
    const auto ms = spectrum::compute_modes(ctx, fam, n, re_max, cfg);
    auto set = std::make_unique<ballres_modeset>();
    set->modes.reserve(ms.size());
    for (const auto& m : ms) {
      ballres_mode cm{};
      cm.family = family;
      cm.n = m.n;
      cm.l = m.l;
      cm.z = to_c(m.z);
      cm.lambda = to_c(m.lambda);
      cm.residual = m.residual;
      cm.lambda_err = m.lambda_err;
      cm.near_origin = m.near_origin ? 1 : 0;
      cm.slot = spectrum::nearest_asymptotic_index(fam, n, m.z.real());
      cm.zero_gap = std::abs(m.z - spectrum::asymptotic_zero(fam, n, cm.slot));
      cm.lambda_gap = std::abs(m.lambda - spectrum::asymptotic_lambda(ctx, fam, n, cm.slot));
      set->modes.push_back(cm);
    }
    *out = set.release();
  });
}

size_t ballres_modeset_size(const ballres_modeset* set) {
  return set ? set->modes.size() : 0;
}

ballres_status ballres_modeset_get(const ballres_modeset* set, size_t index,
                                   ballres_mode* out) {
  return guarded([&] {
    require(set != nullptr && out != nullptr, "null pointer");
    require(index < set->modes.size(), "mode index out of range");
    *out = set->modes[index];
  });
}

void ballres_modeset_free(ballres_modeset* set) { delete set; }

double ballres_asymptotic_zero(int family, int n, int l) {
  return spectrum::asymptotic_zero(family_from(family), n, l);
}

double ballres_asymptotic_lambda(double k, int family, int n, int l) {
  return spectrum::asymptotic_lambda({k}, family_from(family), n, l);
}

ballres_status ballres_phi_profile(int family, int n, double k, ballres_complex lambda,
                                   const double* t, size_t count, ballres_complex* out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null pointer");
    const auto fam = family_from(family);
    for (size_t i = 0; i < count; ++i)
      out[i] = to_c(modes::propagating_phi(fam, n, {k}, from_c(lambda), t[i]));
  });
}

ballres_status ballres_phi_continuity(int family, int n, double k, ballres_complex lambda,
                                      double* out_rel_jump) {
  return guarded([&] {
    require(out_rel_jump != nullptr, "null output pointer");
    const auto fam = family_from(family);
    const cplx lo = modes::propagating_phi(fam, n, {k}, from_c(lambda), 1.0);
    const cplx hi = modes::propagating_phi(fam, n, {k}, from_c(lambda), 1.0 + 1e-12);
    *out_rel_jump = std::abs(lo - hi) / std::max(std::abs(lo), 1.0);
  });
}

ballres_status ballres_mie_a0(double k, double k_tau, ballres_complex* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_c(green::mie_a0({k, k_tau}));
  });
}

ballres_status ballres_phi_radial(double k, double k_tau, const double* t, size_t count,
                                  ballres_complex* out) {
  return guarded([&] {
    require(t != nullptr && out != nullptr, "null pointer");
    const green::ContrastContext ctx{k, k_tau};
    for (size_t i = 0; i < count; ++i) out[i] = to_c(green::phi_radial(ctx, t[i]));
  });
}

ballres_status ballres_fwhm(const double* t, const double* value, size_t count,
                            double* out_width) {
  return guarded([&] {
    require(t != nullptr && value != nullptr && out_width != nullptr, "null pointer");
    *out_width = green::fwhm({t, count}, {value, count});
  });
}

ballres_status ballres_hk_residual(const double x[3], const double z[3], const double p[3],
                                   const double q[3], double k, double radius, int quad_order,
                                   double* out) {
  return guarded([&] {
    require(x && z && p && q && out, "null pointer");
    *out = imaging::hk_residual({x[0], x[1], x[2]}, {z[0], z[1], z[2]}, {p[0], p[1], p[2]},
                                {q[0], q[1], q[2]}, k, {radius, quad_order});
  });
}

ballres_status ballres_imaging_line(const double z0[3], const double p[3], const double q[3],
                                    double k, double radius, int quad_order,
                                    const double* points, size_t count,
                                    ballres_complex* out_qI, double* out_ref) {
  return guarded([&] {
    require(z0 && p && q && points && out_qI, "null pointer");
    const imaging::MeasurementSurface surf{radius, quad_order};
    const Vec3 src{z0[0], z0[1], z0[2]};
    const Vec3 pol{p[0], p[1], p[2]};
    const Vec3 probe{q[0], q[1], q[2]};
    const auto data = imaging::measured_field_free(src, pol, k, surf);
    std::vector<Vec3> grid(count);
    for (size_t i = 0; i < count; ++i)
      grid[i] = {points[3 * i], points[3 * i + 1], points[3 * i + 2]};
    const auto img = imaging::imaging_functional(data, k, grid, surf);
    for (size_t i = 0; i < count; ++i) {
      out_qI[i] = to_c(dot(to_complex(probe), img[i]));
      if (out_ref)
        out_ref[i] =
            dot(to_complex(probe), green::im_green_free(grid[i], src, k) * pol).real() / k;
    }
  });
}

ballres_status ballres_selfcheck(int quick, int fault, int as_json, char** out_report,
                                 int* out_pass) {
  return guarded([&] {
    require(out_report != nullptr && out_pass != nullptr, "null pointer");
    selfcheck::Options opt;
    opt.quick = quick != 0;
    require(fault == BALLRES_FAULT_NONE || fault == BALLRES_FAULT_CALJ_SIGN,
            "unknown fault id");
    opt.fault = static_cast<selfcheck::Fault>(fault);
    const auto rep = selfcheck::run(opt);
    const std::string text = as_json ? rep.to_json() : rep.to_text();
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_report = buf;
    *out_pass = rep.pass() ? 1 : 0;
  });
}

void ballres_string_free(char* s) { std::free(s); }

}  // extern "C"
