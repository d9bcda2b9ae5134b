#include "pba/linalg.hpp"

#include <cmath>

namespace pba {

std::uint64_t exact_binomial(unsigned n, unsigned k) {
  if (n > 64) throw std::domain_error("exact_binomial: n must be <= 64");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // divides exactly at every step
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

// one Gram-Schmidt subtraction pass with real coefficients
CMatrix subtract_span(const SpanBasis& basis, const CMatrix& x) {
  CMatrix r = x;
  for (const auto& t : basis.elements) {
    r -= std::real(hs_inner(t, r)) * t;
  }
  return r;
}

}  // namespace

bool try_extend_span(SpanBasis& basis, const CMatrix& candidate) {
  detail::require_square(candidate, "try_extend_span");
  if (candidate.rows() != basis.dim) {
    throw std::invalid_argument("try_extend_span: candidate dimension " +
                                std::to_string(candidate.rows()) + " does not match basis dim " +
                                std::to_string(basis.dim));
  }
  basis.tol = std::max(basis.tol, span_tolerance(candidate.norm()));

  CMatrix w = subtract_span(basis, candidate);
  const double r1 = w.norm();
  if (r1 <= basis.tol) return false;

  CMatrix w2 = subtract_span(basis, w);
  const double r2 = w2.norm();
  if (r1 <= 10.0 * basis.tol && r2 <= 10.0 * basis.tol) return false;
  if (r2 <= basis.tol) return false;

  basis.elements.push_back(w2 / r2);
  return true;
}

SpanBasis make_span_basis(Eigen::Index dim, const std::vector<CMatrix>& candidates) {
  SpanBasis basis;
  basis.dim = dim;
  for (const auto& c : candidates) try_extend_span(basis, c);
  return basis;
}

ProjectionResult project_residual(const CMatrix& x, const SpanBasis& basis) {
  detail::require_square(x, "project_residual");
  if (x.rows() != basis.dim) {
    throw std::invalid_argument("project_residual: dimension mismatch");
  }
  if (hermiticity_defect(x) > span_tolerance(x.norm())) {
    throw std::domain_error("project_residual: input is not Hermitian within tolerance");
  }

  ProjectionResult out;
  out.coefficients.reserve(basis.size());
  CMatrix r = x;
  for (const auto& t : basis.elements) {
    const double c = std::real(hs_inner(t, x));
    out.coefficients.push_back(c);
    r -= c * t;
  }
  out.residual_norm = r.norm();
  return out;
}

CMatrix expm_hermitian(const CMatrix& g) {
  detail::require_square(g, "expm_hermitian");
  if (hermiticity_defect(g) > span_tolerance(g.norm())) {
    throw std::domain_error("expm_hermitian: generator is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  }
  const Eigen::Index n = g.rows();
  CVector phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phases(j) = std::polar(1.0, es.eigenvalues()(j));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace pba
