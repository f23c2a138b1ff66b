#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "complexmath.hpp"

namespace ballres::rootscan {

using AnalyticFn = std::function<cplx(cplx)>;

struct RootCandidate {
  cplx z;
  double residual = 0;  // |f(z)| at the returned point
  int iterations = 0;
};

struct ScanConfig {
  double re_min = 0.25;
  double re_max = 30.0;
  double strip_height = 3.0;      // zeros searched in |Im z| <= strip_height
  double seed_spacing = M_PI / 4;  // real-axis seed pitch
  double tol = 1e-11;             // residual acceptance
  int max_iter = 80;
  double dedupe_radius = 1e-6;

  void validate() const;
};

// Muller's method from three distinct seeds. Converges when
// |dz| <= 1e-13 (1+|z|) or |f(z)| <= tol; the quadratic root with the larger
// denominator magnitude is taken. Returns nullopt on non-convergence or when
// the iterate leaves the padded scan strip.
std::optional<RootCandidate> muller_solve(const AnalyticFn& f,
                                          std::array<cplx, 3> seeds,
                                          const ScanConfig& cfg);

// Enumerates zeros of f inside [re_min, re_max] x [-strip_height, strip_height].
// Seed rows at Im = 0 and +-strip_height/2, pitch seed_spacing; candidates are
// deduplicated (keeping the smallest residual) and sorted by ascending Re z.
// Deterministic for a fixed config regardless of worker count.
std::vector<RootCandidate> scan_strip(const AnalyticFn& f, const ScanConfig& cfg);

}  // namespace ballres::rootscan
