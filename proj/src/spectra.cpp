// infsup — spectra module implementation.

#include "infsup/spectra.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

namespace infsup::spectra {

double InnerProductSpace::norm(const Vector& x) const {
  if (x.size() != dim()) {
    throw DimensionMismatch("norm: vector length does not match space dimension");
  }
  const double sq = (x.adjoint() * gram * x)(0, 0).real();
  return std::sqrt(std::max(sq, 0.0));
}

void InnerProductSpace::validate() const {
  if (gram.rows() == 0 || gram.rows() != gram.cols()) {
    throw ValidationError("gram matrix must be square with positive dimension");
  }
  if (!gram.allFinite()) {
    throw ValidationError("gram matrix has non-finite entries");
  }
  for (Index j = 0; j < gram.cols(); ++j) {
    for (Index i = 0; i <= j; ++i) {
      if (gram(i, j) != std::conj(gram(j, i))) {
        std::ostringstream msg;
        msg << "gram matrix is not Hermitian at entry (" << i << "," << j << ")";
        throw ValidationError(msg.str());
      }
    }
  }
  whiten(*this);  // positive definiteness
}

Matrix WhitenFactor::solve_lower(const Matrix& x) const {
  return lower_.triangularView<Eigen::Lower>().solve(x);
}

Matrix WhitenFactor::solve_lower_adjoint(const Matrix& x) const {
  return lower_.adjoint().triangularView<Eigen::Upper>().solve(x);
}

Matrix WhitenFactor::apply_adjoint(const Matrix& x) const {
  return lower_.adjoint() * x;
}

Matrix WhitenFactor::solve_lower_adjoint_right(const Matrix& x) const {
  // X L^{-*} = (L^{-1} X*)*
  return solve_lower(x.adjoint()).adjoint();
}

WhitenFactor whiten(const InnerProductSpace& space) {
  if (space.gram.rows() == 0 || space.gram.rows() != space.gram.cols()) {
    throw ValidationError("whiten: gram matrix must be square with positive dimension");
  }
  Eigen::LLT<Matrix> llt(space.gram);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite(
        "gram matrix is not positive definite (Cholesky factorization failed)");
  }
  return WhitenFactor(Matrix(llt.matrixL()));
}

void FormMatrix::validate() const {
  space_v.validate();
  space_w.validate();
  if (mat.rows() != space_w.dim() || mat.cols() != space_v.dim()) {
    throw DimensionMismatch("form matrix dimensions do not match its spaces");
  }
  if (!mat.allFinite()) {
    throw ValidationError("form matrix has non-finite entries");
  }
}

namespace {

// L_W^{-1} . mat . L_V^{-*}
Matrix whitened_form_matrix(const FormMatrix& form) {
  if (form.mat.rows() != form.space_w.dim() || form.mat.cols() != form.space_v.dim()) {
    throw DimensionMismatch("form matrix dimensions do not match its spaces");
  }
  const WhitenFactor lw = whiten(form.space_w);
  const WhitenFactor lv = whiten(form.space_v);
  return lv.solve_lower_adjoint_right(lw.solve_lower(form.mat));
}

}  // namespace

RealVector whitened_singular_values(const FormMatrix& form) {
  Eigen::JacobiSVD<Matrix> svd(whitened_form_matrix(form));
  return svd.singularValues();
}

double form_norm(const FormMatrix& form) {
  return whitened_singular_values(form).maxCoeff();
}

double infsup_constant(const FormMatrix& form) {
  const Index dim_v = form.space_v.dim();
  const Index dim_w = form.space_w.dim();
  if (dim_w < dim_v) {
    return 0.0;
  }
  const RealVector sigma = whitened_singular_values(form);
  return sigma(dim_v - 1);  // sorted nonincreasing
}

double operator_norm(const Matrix& m, const InnerProductSpace& from,
                     const InnerProductSpace& to) {
  if (m.cols() != from.dim() || m.rows() != to.dim()) {
    throw DimensionMismatch("operator_norm: matrix does not map `from` to `to`");
  }
  const WhitenFactor lf = whiten(from);
  const WhitenFactor lt = whiten(to);
  const Matrix whitened = lf.solve_lower_adjoint_right(lt.apply_adjoint(m));
  Eigen::JacobiSVD<Matrix> svd(whitened);
  return svd.singularValues().maxCoeff();
}

double dual_norm(const DualVector& theta) {
  if (theta.coeffs.size() != theta.space.dim()) {
    throw DimensionMismatch("dual_norm: coefficient length does not match space");
  }
  const WhitenFactor l = whiten(theta.space);
  return l.solve_lower(theta.coeffs).norm();
}

}  // namespace infsup::spectra
