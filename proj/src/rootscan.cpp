#include "rootscan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace ballres::rootscan {

void ScanConfig::validate() const {
  if (!(re_min < re_max)) throw std::invalid_argument("scan: need re_min < re_max");
  if (!(strip_height > 0)) throw std::invalid_argument("scan: need strip_height > 0");
  if (!(tol > 0)) throw std::invalid_argument("scan: need tol > 0");
  if (!(dedupe_radius > 0)) throw std::invalid_argument("scan: need dedupe_radius > 0");
  if (!(seed_spacing > 0)) throw std::invalid_argument("scan: need seed_spacing > 0");
  if (max_iter < 1) throw std::invalid_argument("scan: need max_iter >= 1");
}

namespace {

bool inside_padded_strip(cplx z, const ScanConfig& cfg) {
  const double pad = 0.5 + cfg.seed_spacing;
  return z.real() > cfg.re_min - pad && z.real() < cfg.re_max + pad &&
         std::abs(z.imag()) < cfg.strip_height + pad;
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

std::optional<RootCandidate> muller_attempt(const AnalyticFn& f,
                                            std::array<cplx, 3> seeds,
                                            const ScanConfig& cfg) {
  cplx z2 = seeds[0], z1 = seeds[1], z0 = seeds[2];
  cplx f2 = f(z2), f1 = f(z1), f0 = f(z0);
  if (!finite(f0) || !finite(f1) || !finite(f2)) return std::nullopt;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    const cplx h1 = z1 - z2, h0 = z0 - z1;
    if (std::abs(h0) == 0.0 || std::abs(h1) == 0.0 || std::abs(z0 - z2) == 0.0)
      return std::nullopt;
    const cplx d1 = (f1 - f2) / h1;
    const cplx d0 = (f0 - f1) / h0;
    const cplx a = (d0 - d1) / (h0 + h1);
    const cplx b = a * h0 + d0;
    const cplx disc = std::sqrt(b * b - 4.0 * f0 * a);
    // pick the quadratic root with the larger denominator
    const cplx den = (std::abs(b + disc) >= std::abs(b - disc)) ? b + disc : b - disc;
    if (std::abs(den) == 0.0) return std::nullopt;  // degenerate quadratic
    const cplx dz = -2.0 * f0 / den;
    const cplx znext = z0 + dz;
    if (!finite(znext) || !inside_padded_strip(znext, cfg)) return std::nullopt;
    const cplx fnext = f(znext);
    if (!finite(fnext)) return std::nullopt;

    z2 = z1; f2 = f1;
    z1 = z0; f1 = f0;
    z0 = znext; f0 = fnext;

    if (std::abs(dz) <= 1e-13 * (1.0 + std::abs(z0)) || std::abs(f0) <= cfg.tol) {
      if (std::abs(f0) <= cfg.tol) return RootCandidate{z0, std::abs(f0), it};
      return std::nullopt;  // stalled without meeting the residual target
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RootCandidate> muller_solve(const AnalyticFn& f,
                                          std::array<cplx, 3> seeds,
                                          const ScanConfig& cfg) {
  if (seeds[0] == seeds[1] || seeds[1] == seeds[2] || seeds[0] == seeds[2])
    throw std::invalid_argument("muller_solve: seeds must be pairwise distinct");
  auto r = muller_attempt(f, seeds, cfg);
  if (r) return r;
  // One perturbed retry covers the collinear/degenerate starts.
  const cplx eps{5e-3, 3e-3};
  return muller_attempt(f, {seeds[0] + eps, seeds[1] - eps, seeds[2] + cplx{0.0, 7e-3}}, cfg);
}

std::vector<RootCandidate> scan_strip(const AnalyticFn& f, const ScanConfig& cfg) {
  cfg.validate();

  std::vector<cplx> seeds;
  const double rows[3] = {0.0, +0.5 * cfg.strip_height, -0.5 * cfg.strip_height};
  for (double im : rows)
    for (double re = cfg.re_min; re <= cfg.re_max + 1e-12; re += cfg.seed_spacing)
      seeds.emplace_back(re, im);

  std::vector<std::optional<RootCandidate>> found(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    const cplx s = seeds[i];
    found[i] = muller_solve(f, {s, s + cplx{1e-2, 0.0}, s + cplx{0.0, 1e-2}}, cfg);
  });

  std::vector<RootCandidate> hits;
  for (const auto& c : found) {
    if (!c) continue;
    if (c->z.real() < cfg.re_min - 1e-12 || c->z.real() > cfg.re_max + 1e-12) continue;
    if (std::abs(c->z.imag()) > cfg.strip_height) continue;
    hits.push_back(*c);
  }

  // Canonical order before dedupe keeps the output independent of how the
  // seed solves were scheduled.
  std::sort(hits.begin(), hits.end(), [](const RootCandidate& a, const RootCandidate& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
    return a.residual < b.residual;
  });

  std::vector<RootCandidate> out;
  for (const auto& c : hits) {
    bool merged = false;
    for (auto& kept : out) {
      if (std::abs(kept.z - c.z) < cfg.dedupe_radius) {
        if (c.residual < kept.residual) kept = c;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const RootCandidate& a, const RootCandidate& b) {
    return a.z.real() < b.z.real();
  });
  return out;
}

}  // namespace ballres::rootscan
