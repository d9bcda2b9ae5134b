#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pba {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& x, const char* what) {
  if (x.rows() != x.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

template <typename DX, typename DY>
void require_same_square(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                         const char* what) {
  require_square(x, what);
  require_square(y, what);
  if (x.rows() != y.rows()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch, " +
                                std::to_string(x.rows()) + " vs " + std::to_string(y.rows()));
  }
}

}  // namespace detail

/// Commutator XY - YX.
template <typename DX, typename DY>
CMatrix commutator(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  detail::require_same_square(x, y, "commutator");
  return x.derived() * y.derived() - y.derived() * x.derived();
}

/// Anticommutator XY + YX.
template <typename DX, typename DY>
CMatrix anticommutator(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  detail::require_same_square(x, y, "anticommutator");
  return x.derived() * y.derived() + y.derived() * x.derived();
}

/// Hilbert-Schmidt inner product tr(X^dag Y); antilinear in the first argument.
template <typename DX, typename DY>
Complex hs_inner(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  detail::require_same_square(x, y, "hs_inner");
  return x.derived().conjugate().cwiseProduct(y.derived()).sum();
}

/// Largest entry magnitude.
inline double max_abs(const CMatrix& x) { return x.cwiseAbs().maxCoeff(); }

/// Frobenius distance between X and its adjoint.
inline double hermiticity_defect(const CMatrix& x) { return (x - x.adjoint()).norm(); }

/// Scale-relative tolerance used for span/rank decisions. Entries grow like
/// (s+1)*sqrt(s) across the library, so an absolute cutoff would not survive
/// larger cutoffs.
inline double span_tolerance(double max_frobenius_norm) {
  return 1e-10 * (1.0 + max_frobenius_norm);
}

/// Exact binomial coefficient; n <= 64 keeps the result within 64 bits.
std::uint64_t exact_binomial(unsigned n, unsigned k);

/// Ordered Hilbert-Schmidt-orthonormal set of Hermitian traceless matrices.
struct SpanBasis {
  Eigen::Index dim = 0;
  std::vector<CMatrix> elements;
  double tol = 0.0;

  std::size_t size() const noexcept { return elements.size(); }
};

/// Appends the component of `candidate` outside span(basis) when that component
/// is resolvable above basis.tol. Classical Gram-Schmidt with one
/// reorthogonalization pass; residuals inside [tol, 10*tol] are re-checked
/// after the second pass before the candidate is accepted. Returns true when
/// the basis grew. Updates basis.tol from the candidate norm.
bool try_extend_span(SpanBasis& basis, const CMatrix& candidate);

/// Orthonormalizes `candidates` into a SpanBasis, dropping dependent entries.
SpanBasis make_span_basis(Eigen::Index dim, const std::vector<CMatrix>& candidates);

struct ProjectionResult {
  std::vector<double> coefficients;  // real HS projections <X_i, X>
  double residual_norm = 0.0;        // ||X - sum c_i X_i||_F
};

/// Projects Hermitian X onto the basis span. X must be Hermitian within the
/// scale-relative tolerance; the coefficients are real because both sides are.
ProjectionResult project_residual(const CMatrix& x, const SpanBasis& basis);

/// U = exp(iG) for Hermitian G, via eigendecomposition. U is unitary, and
/// det U = exp(i tr G), so traceless G gives |det U| = det U = 1.
CMatrix expm_hermitian(const CMatrix& g);

}  // namespace pba
