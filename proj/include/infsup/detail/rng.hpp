// infsup — deterministic random stream.
//
// mt19937_64 has a standardized output sequence; the double mappings below
// avoid std::uniform_real_distribution, whose output is implementation
// defined. Identical seeds therefore produce identical streams on every
// platform.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "infsup/types.hpp"

namespace infsup::detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no cached state, two uniforms per draw).
  double normal() {
    const double u1 = std::fmax(uniform(), 0x1.0p-1022);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im);
  }

  Vector normal_vector(Index n, bool complex_entries) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) {
      v(i) = complex_entries ? cnormal() : Complex(normal(), 0.0);
    }
    return v;
  }

  Matrix normal_matrix(Index rows, Index cols, bool complex_entries) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) {
        m(i, j) = complex_entries ? cnormal() : Complex(normal(), 0.0);
      }
    }
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace infsup::detail
