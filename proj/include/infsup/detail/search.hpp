// infsup — multistart search over complex unit spheres.
//
// Extrema of scale-invariant functionals (norm ratios) are located by
// seeded multistart Nelder-Mead refinement on the real embedding, with a
// dense angular grid added at complex dimension <= 3. Everything is
// deterministic for a fixed seed and resolution.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "infsup/types.hpp"

namespace infsup::detail {

struct SphereSearch {
  Index dim = 1;  // complex dimension of the sphere
  int starts = 64;
  int resolution = 10000;
  std::uint64_t seed = 20240601;
  // Caller-supplied directions always included in the candidate pool
  // (e.g. columns of an operator whose range attains the extremum).
  std::vector<Vector> extra_candidates;

  struct Result {
    double value = 0.0;
    Vector arg;
    // Median functional value over the candidate pool; a stable scale
    // proxy used for near-zero thresholds.
    double pool_median = 0.0;
  };

  Result minimize(const std::function<double(const Vector&)>& f) const;
  Result maximize(const std::function<double(const Vector&)>& f) const;
};

/// Deterministic angular grid on the complex unit sphere, roughly
/// `resolution` points, defined for dim <= 3.
std::vector<Vector> sphere_grid(Index dim, int resolution);

/// Plain Nelder-Mead minimizer on R^n. Returns the best point found.
RealVector nelder_mead(const std::function<double(const RealVector&)>& f,
                       const RealVector& x0, double initial_step, int max_iters,
                       double* best_value);

}  // namespace infsup::detail
