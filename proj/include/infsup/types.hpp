// infsup — inf-sup constants and Fortin operators on finite-dimensional spaces.
//
// Common scalar/matrix aliases and library-wide default tolerances.

#pragma once

#include <complex>

#include <Eigen/Core>

namespace infsup {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// A singular value sigma counts as zero iff sigma <= rank_tol * sigma_max.
inline constexpr double kDefaultRankTol = 1e-10;
// Relative tolerance for certificate residuals and bound slacks.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr const char* kToolName = "infsup";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace infsup
