// infsup — inf-sup constants and Fortin operators on finite-dimensional spaces.
//
// fortin: restriction of a form to a subspace pair, the dual-pairing map
// theta, the kernel complement of the discrete adjoint, its right inverse,
// and the Fortin operator pi_h = right_inverse . theta together with a
// machine-checkable certificate of its defining properties.

#pragma once

#include "infsup/spectra.hpp"

namespace infsup::fortin {

using spectra::DualVector;
using spectra::FormMatrix;
using spectra::InnerProductSpace;

/// Full-column-rank embeddings of a subspace pair (V_h, W_h) into the fine
/// spaces of `form`. Subspaces inherit the fine norms through the embeddings.
struct SubspacePair {
  FormMatrix form;  // fine form; houses V, W and their Gram matrices
  Matrix embed_v;   // (dim V) x (dim V_h)
  Matrix embed_w;   // (dim W) x (dim W_h)

  Index dim_vh() const { return embed_v.cols(); }
  Index dim_wh() const { return embed_w.cols(); }

  void validate(double rank_tol = kDefaultRankTol) const;
};

/// The discrete operator A_h and the cross pairing used by theta:
///   mat_a_h = P_W* . mat . P_V   (a on V_h x W_h)
///   cross_c = mat . P_V          (a on V_h x W)
struct DiscreteOperator {
  Matrix mat_a_h;  // (dim W_h) x (dim V_h)
  Matrix cross_c;  // (dim W)   x (dim V_h)
};

/// Everything `restrict_form` produces: the discrete operator, the induced
/// sub-Gram spaces, and the discrete inf-sup constant alpha_hat.
struct Restriction {
  DiscreteOperator disc;
  InnerProductSpace space_vh;
  InnerProductSpace space_wh;
  double alpha_hat = 0.0;
};

/// Gram-orthonormal bases of ker(A_h*) and of its orthogonal complement K_h
/// in W_h. Columns are deterministically ordered and phase-normalized.
struct KernelComplement {
  Matrix kernel;      // (dim W_h) x (dim ker)
  Matrix complement;  // (dim W_h) x (dim W_h - dim ker)
};

/// The Fortin operator pi_h : W -> W_h and the constants certified at build
/// time. gamma_pi = alpha_hat / norm_a is the guaranteed stability constant.
struct FortinOperator {
  Matrix mat_pi;  // (dim W_h) x (dim W)
  double alpha_hat = 0.0;
  double norm_a = 0.0;
  double gamma_pi = 0.0;
  Matrix complement_basis;   // basis of the complement pi_h maps into
  double solve_rcond = 0.0;  // reciprocal condition estimate of the A_h*-solve
};

/// Verification record for a built Fortin operator. `pass()` is true only if
/// every residual is below its tolerance and every bound holds with the
/// recorded slack.
struct Certificate {
  double orthogonality_residual = 0.0;
  double measured_norm = 0.0;
  double stability_bound = 0.0;
  double idempotence_residual = 0.0;
  double direct_bound_lhs = 0.0;
  double direct_bound_rhs = 0.0;
  double alpha_tilde = 0.0;
  double range_residual = 0.0;
  double solve_rcond = 0.0;
  double kappa = 1.0;

  double tol = kDefaultTol;
  double rank_tol = kDefaultRankTol;

  bool orthogonality_ok = false;
  bool stability_ok = false;
  bool idempotence_ok = false;
  bool direct_ok = false;
  bool range_ok = false;

  bool pass() const {
    return orthogonality_ok && stability_ok && idempotence_ok && direct_ok && range_ok;
  }
};

/// Restricts the fine form to the subspace pair and computes the discrete
/// inf-sup constant alpha_hat of the restricted form.
Restriction restrict_form(const SubspacePair& pair);

/// theta(w) in V_h' with <theta(w), v_h> = conj(a(v_h, w)) for all v_h;
/// coefficients t = cross_c* . w.
DualVector theta(const Restriction& restriction, const Vector& w);

/// Splits W_h into ker(A_h*) and its Gram-orthogonal complement K_h.
KernelComplement kernel_complement(const DiscreteOperator& disc,
                                   const InnerProductSpace& space_wh,
                                   double rank_tol = kDefaultRankTol);

/// Solves A_h* . y = t with y constrained to the span of `complement`.
/// Throws InfSupFailure if the restricted adjoint is not invertible.
Vector right_inverse(const DiscreteOperator& disc, const Matrix& complement,
                     const DualVector& theta_vec);

/// Builds pi_h = complement . (A_h* . complement)^{-1} . cross_c*. Throws
/// InfSupFailure when alpha_hat <= rank_tol * norm_a (the discrete inf-sup
/// condition fails and no bounded right inverse exists).
FortinOperator build_fortin(const SubspacePair& pair,
                            double rank_tol = kDefaultRankTol);

/// Checks the defining identities of the built operator:
///  (a) orthogonality  A_h* . pi_h = cross_c*,
///  (b) stability      |pi_h|_{W->W} <= norm_a / (kappa * alpha_hat),
///  (c) idempotence    pi_h . P_W . pi_h = pi_h,
///  (d) direct bound   alpha_hat >= alpha_tilde / |pi_h|,
/// plus the range property (columns of pi_h lie in the complement span).
/// Failures are recorded in the certificate, never thrown. `kappa` is the
/// decomposition stability constant (1 for the Gram-orthogonal complement).
Certificate verify_fortin(const FortinOperator& op, const SubspacePair& pair,
                          double tol = kDefaultTol,
                          double rank_tol = kDefaultRankTol, double kappa = 1.0);

}  // namespace infsup::fortin
