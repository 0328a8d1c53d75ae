// infsup — fortin module implementation.

#include "infsup/fortin.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace infsup::fortin {

namespace {

// Exact Hermitian symmetrization: (x + x*)/2 entry by entry. conj and the
// averaged sum are exact in IEEE arithmetic, so the result satisfies
// h == h.adjoint() bitwise.
Matrix hermitize(const Matrix& x) { return 0.5 * (x + Matrix(x.adjoint())); }

// Multiplies each column by a unit phase so its largest-magnitude entry is
// real positive. Keeps orthonormal bases orthonormal and makes factorization
// output reproducible.
void normalize_column_phases(Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    Index imax = 0;
    m.col(j).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = m(imax, j);
    const double mag = std::abs(pivot);
    if (mag > 0.0) {
      m.col(j) *= std::conj(pivot) / mag;
      m(imax, j) = Complex(mag, 0.0);
    }
  }
}

void check_embedding_rank(const Matrix& embed, const spectra::WhitenFactor& fine,
                          double rank_tol, const char* name) {
  const Matrix whitened = fine.apply_adjoint(embed);
  Eigen::JacobiSVD<Matrix> svd(whitened);
  const RealVector sigma = svd.singularValues();
  if (!(sigma(sigma.size() - 1) > rank_tol * sigma(0))) {
    std::ostringstream msg;
    msg << name << " embedding is not of full column rank at rank_tol=" << rank_tol;
    throw ValidationError(msg.str());
  }
}

}  // namespace

void SubspacePair::validate(double rank_tol) const {
  form.validate();
  if (embed_v.rows() != form.space_v.dim() || embed_w.rows() != form.space_w.dim()) {
    throw DimensionMismatch("embedding row counts do not match the fine spaces");
  }
  if (embed_v.cols() < 1 || embed_w.cols() < 1) {
    throw InvalidDims("subspaces must have positive dimension");
  }
  if (embed_v.cols() > embed_v.rows() || embed_w.cols() > embed_w.rows()) {
    throw InvalidDims("subspace dimension exceeds fine-space dimension");
  }
  if (!embed_v.allFinite() || !embed_w.allFinite()) {
    throw ValidationError("embedding matrices have non-finite entries");
  }
  check_embedding_rank(embed_v, spectra::whiten(form.space_v), rank_tol, "V_h");
  check_embedding_rank(embed_w, spectra::whiten(form.space_w), rank_tol, "W_h");
}

Restriction restrict_form(const SubspacePair& pair) {
  Restriction r;
  r.disc.cross_c = pair.form.mat * pair.embed_v;
  r.disc.mat_a_h = pair.embed_w.adjoint() * r.disc.cross_c;

  const Matrix gram_vh =
      hermitize(pair.embed_v.adjoint() * pair.form.space_v.gram * pair.embed_v);
  const Matrix gram_wh =
      hermitize(pair.embed_w.adjoint() * pair.form.space_w.gram * pair.embed_w);
  r.space_vh = InnerProductSpace(gram_vh);
  r.space_wh = InnerProductSpace(gram_wh);

  try {
    spectra::whiten(r.space_vh);
    spectra::whiten(r.space_wh);
  } catch (const NotPositiveDefinite&) {
    throw NotPositiveDefinite(
        "induced sub-Gram matrix is not positive definite (rank-deficient embedding)");
  }

  r.alpha_hat = spectra::infsup_constant(
      FormMatrix{r.disc.mat_a_h, r.space_vh, r.space_wh});
  return r;
}

DualVector theta(const Restriction& restriction, const Vector& w) {
  if (w.size() != restriction.disc.cross_c.rows()) {
    throw DimensionMismatch("theta: vector length does not match dim W");
  }
  return DualVector{restriction.disc.cross_c.adjoint() * w, restriction.space_vh};
}

KernelComplement kernel_complement(const DiscreteOperator& disc,
                                   const InnerProductSpace& space_wh,
                                   double rank_tol) {
  const Index dim_wh = disc.mat_a_h.rows();
  if (space_wh.dim() != dim_wh) {
    throw DimensionMismatch("kernel_complement: gram dimension does not match W_h");
  }
  const spectra::WhitenFactor l = spectra::whiten(space_wh);

  // In whitened coordinates u = L* w_h the adjoint acts as (L^{-1} A_h)*, so
  // ker(A_h*) maps to ker(B*) with B = L^{-1} A_h, and the Gram-orthogonal
  // complement maps to range(B). A column-pivoted QR of B splits the two.
  const Matrix b = l.solve_lower(disc.mat_a_h);
  Eigen::ColPivHouseholderQR<Matrix> qr(b);
  const auto rdiag = qr.matrixQR().diagonal().cwiseAbs();
  const double pivot_max = rdiag.size() > 0 ? rdiag(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < rdiag.size(); ++i) {
    if (rdiag(i) > rank_tol * pivot_max && rdiag(i) > 0.0) {
      ++rank;
    }
  }

  const Matrix q_full = Matrix(qr.householderQ());
  Matrix complement = l.solve_lower_adjoint(q_full.leftCols(rank));
  Matrix kernel = l.solve_lower_adjoint(q_full.rightCols(dim_wh - rank));
  normalize_column_phases(complement);
  normalize_column_phases(kernel);
  return KernelComplement{std::move(kernel), std::move(complement)};
}

Vector right_inverse(const DiscreteOperator& disc, const Matrix& complement,
                     const DualVector& theta_vec) {
  const Index dim_vh = disc.mat_a_h.cols();
  if (theta_vec.coeffs.size() != dim_vh) {
    throw DimensionMismatch("right_inverse: functional length does not match V_h");
  }
  if (complement.cols() != dim_vh) {
    std::ostringstream msg;
    msg << "right_inverse: discrete inf-sup condition fails (kernel complement has "
        << complement.cols() << " columns, need " << dim_vh << ")";
    throw InfSupFailure(msg.str());
  }
  const Matrix restricted = disc.mat_a_h.adjoint() * complement;
  Eigen::PartialPivLU<Matrix> lu(restricted);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw InfSupFailure(
        "right_inverse: restricted adjoint is numerically singular; the discrete "
        "inf-sup condition fails");
  }
  return complement * lu.solve(theta_vec.coeffs);
}

FortinOperator build_fortin(const SubspacePair& pair, double rank_tol) {
  pair.validate(rank_tol);
  const Restriction r = restrict_form(pair);
  const double norm_a = spectra::form_norm(pair.form);
  if (!(r.alpha_hat > rank_tol * norm_a)) {
    std::ostringstream msg;
    msg << "discrete inf-sup condition fails: alpha_hat=" << r.alpha_hat
        << " <= rank_tol*norm_a=" << rank_tol * norm_a;
    throw InfSupFailure(msg.str());
  }

  const KernelComplement kc = kernel_complement(r.disc, r.space_wh, rank_tol);
  if (kc.complement.cols() != pair.dim_vh()) {
    std::ostringstream msg;
    msg << "discrete inf-sup condition fails: rank of A_h is " << kc.complement.cols()
        << " but dim V_h is " << pair.dim_vh();
    throw InfSupFailure(msg.str());
  }

  const Matrix restricted = r.disc.mat_a_h.adjoint() * kc.complement;
  Eigen::PartialPivLU<Matrix> lu(restricted);

  FortinOperator op;
  op.mat_pi = kc.complement * lu.solve(Matrix(r.disc.cross_c.adjoint()));
  op.alpha_hat = r.alpha_hat;
  op.norm_a = norm_a;
  op.gamma_pi = r.alpha_hat / norm_a;
  op.complement_basis = kc.complement;
  op.solve_rcond = lu.rcond();
  return op;
}

Certificate verify_fortin(const FortinOperator& op, const SubspacePair& pair,
                          double tol, double rank_tol, double kappa) {
  const Restriction r = restrict_form(pair);

  Certificate cert;
  cert.tol = tol;
  cert.rank_tol = rank_tol;
  cert.kappa = kappa;
  cert.solve_rcond = op.solve_rcond;

  // (a) orthogonality: A_h* pi_h = cross_c*, i.e. a(v_h, pi_h w - w) = 0.
  const Matrix cross_adj = r.disc.cross_c.adjoint();
  const double cross_norm = r.disc.cross_c.norm();
  cert.orthogonality_residual =
      (r.disc.mat_a_h.adjoint() * op.mat_pi - cross_adj).norm() /
      (cross_norm > 0.0 ? cross_norm : 1.0);
  cert.orthogonality_ok = cert.orthogonality_residual <= tol;

  // (b) stability against the guaranteed constant.
  const Matrix pi_fine = pair.embed_w * op.mat_pi;
  cert.measured_norm =
      spectra::operator_norm(pi_fine, pair.form.space_w, pair.form.space_w);
  cert.stability_bound = op.norm_a / (kappa * op.alpha_hat);
  cert.stability_ok = cert.measured_norm <= cert.stability_bound * (1.0 + tol);

  // (c) idempotence through the embedding.
  const double pi_norm = op.mat_pi.norm();
  cert.idempotence_residual =
      (op.mat_pi * pi_fine - op.mat_pi).norm() / (pi_norm > 0.0 ? pi_norm : 1.0);
  cert.idempotence_ok = cert.idempotence_residual <= tol;

  // (d) direct direction: alpha_hat >= alpha_tilde / |pi_h| with alpha_tilde
  // the (V_h, W)-cross inf-sup constant.
  cert.alpha_tilde = spectra::infsup_constant(
      FormMatrix{r.disc.cross_c, r.space_vh, pair.form.space_w});
  cert.direct_bound_lhs = op.alpha_hat;
  cert.direct_bound_rhs = cert.alpha_tilde / cert.measured_norm;
  cert.direct_ok = cert.direct_bound_lhs >= cert.direct_bound_rhs * (1.0 - tol);

  // Range property: columns of pi_h lie in the span of the complement basis.
  const spectra::WhitenFactor l = spectra::whiten(r.space_wh);
  const Matrix pi_whitened = l.apply_adjoint(op.mat_pi);
  Eigen::HouseholderQR<Matrix> qr(l.apply_adjoint(op.complement_basis));
  const Matrix q_thin =
      Matrix(qr.householderQ()).leftCols(op.complement_basis.cols());
  const double pi_w_norm = pi_whitened.norm();
  cert.range_residual =
      (pi_whitened - q_thin * (q_thin.adjoint() * pi_whitened)).norm() /
      (pi_w_norm > 0.0 ? pi_w_norm : 1.0);
  cert.range_ok = cert.range_residual <= rank_tol;

  return cert;
}

}  // namespace infsup::fortin
