// infsup — inf-sup constants and Fortin operators on finite-dimensional spaces.
//
// spectra: Gram-matrix whitening, norms, dual norms, and whitened singular
// values. Boundedness and inf-sup constants of a sesquilinear form reduce to
// extreme singular values of the whitened coefficient matrix.

#pragma once

#include <Eigen/Dense>

#include "infsup/errors.hpp"
#include "infsup/types.hpp"

namespace infsup::spectra {

/// Finite-dimensional complex space whose inner product is x* . gram . y.
/// The Gram matrix must be Hermitian positive definite; the induced norm is
/// norm(x) = sqrt(x* . gram . x).
struct InnerProductSpace {
  Matrix gram;

  InnerProductSpace() = default;
  explicit InnerProductSpace(Matrix g) : gram(std::move(g)) {}

  static InnerProductSpace euclidean(Index dim) {
    return InnerProductSpace(Matrix::Identity(dim, dim));
  }

  Index dim() const { return gram.rows(); }

  double norm(const Vector& x) const;

  /// Checks the type invariants: square, entrywise Hermitian, positive
  /// definite. Throws ValidationError or NotPositiveDefinite.
  void validate() const;
};

/// Cholesky factor of a Gram matrix, gram = lower . lower*. Whitening maps
/// Gram norms to Euclidean ones: norm_G(x) = |lower* x|_2.
class WhitenFactor {
 public:
  explicit WhitenFactor(Matrix lower) : lower_(std::move(lower)) {}

  const Matrix& lower() const { return lower_; }
  Index dim() const { return lower_.rows(); }

  /// L^{-1} X
  Matrix solve_lower(const Matrix& x) const;
  /// L^{-*} X
  Matrix solve_lower_adjoint(const Matrix& x) const;
  /// L* X
  Matrix apply_adjoint(const Matrix& x) const;
  /// X L^{-*}
  Matrix solve_lower_adjoint_right(const Matrix& x) const;

 private:
  Matrix lower_;
};

/// Coefficient matrix of a bounded sesquilinear form a on V x W, with
/// a(v, w) = w* . mat . v: linear in v, antilinear in w. Entry (j, i) is the
/// form evaluated on the i-th V basis vector and the j-th W basis vector.
struct FormMatrix {
  Matrix mat;  // (dim W) x (dim V)
  InnerProductSpace space_v;
  InnerProductSpace space_w;

  Complex evaluate(const Vector& v, const Vector& w) const {
    return (w.adjoint() * mat * v)(0, 0);
  }

  /// The adjoint form a*(w, v) = conj(a(v, w)): coefficient matrix mat*,
  /// spaces swapped.
  FormMatrix adjoint() const { return FormMatrix{mat.adjoint(), space_w, space_v}; }

  void validate() const;
};

/// An antilinear functional theta on `space` with pairing <theta, v> = v* . t.
struct DualVector {
  Vector coeffs;
  InnerProductSpace space;  // the predual
};

/// Cholesky-factors the Gram matrix. Throws NotPositiveDefinite if a pivot
/// is not strictly positive.
WhitenFactor whiten(const InnerProductSpace& space);

/// All min(dim V, dim W) singular values of L_W^{-1} . mat . L_V^{-*},
/// sorted nonincreasing. These are the stationary values of
/// |a(v,w)| / (|v|_V |w|_W).
RealVector whitened_singular_values(const FormMatrix& form);

/// |a| = sup |a(v,w)| / (|v|_V |w|_W) = largest whitened singular value.
double form_norm(const FormMatrix& form);

/// alpha = inf_v sup_w |a(v,w)| / (|v|_V |w|_W): the (dim V)-th largest
/// whitened singular value when dim W >= dim V, zero otherwise.
double infsup_constant(const FormMatrix& form);

/// sup |M x|_to / |x|_from = largest singular value of L_to* . M . L_from^{-*}.
double operator_norm(const Matrix& m, const InnerProductSpace& from,
                     const InnerProductSpace& to);

/// Dual norm |theta|' = sup |<theta, v>| / |v| = |L^{-1} t|_2.
double dual_norm(const DualVector& theta);

}  // namespace infsup::spectra
