#include "pba/lie_closure.hpp"

#include <cmath>

namespace pba {

std::vector<CMatrix> hermitian_seeds(const PBOperators& pb) {
  const Complex i(0.0, 1.0);
  return {pb.a + pb.adag, i * (pb.adag - pb.a), pb.A};
}

namespace {

bool spans_match(const SpanBasis& basis, const std::vector<CMatrix>& reference) {
  SpanBasis ref;
  ref.dim = basis.dim;
  ref.elements = reference;
  ref.tol = span_tolerance(1.0);
  for (const auto& x : basis.elements) {
    if (project_residual(x, ref).residual_norm >= 1e-9 * (1.0 + x.norm())) return false;
  }
  for (const auto& x : reference) {
    if (project_residual(x, basis).residual_norm >= 1e-9 * (1.0 + x.norm())) return false;
  }
  return true;
}

}  // namespace

LieClosureResult lie_closure(const std::vector<CMatrix>& seeds, int max_iterations) {
  if (seeds.empty()) throw std::invalid_argument("lie_closure: no seeds");
  const Eigen::Index n = seeds.front().rows();
  for (const auto& x : seeds) {
    detail::require_square(x, "lie_closure");
    if (x.rows() != n) throw std::invalid_argument("lie_closure: seeds of mixed dimension");
    if (!x.allFinite()) throw std::invalid_argument("lie_closure: seed has non-finite entries");
    const double tol = span_tolerance(x.norm());
    if (hermiticity_defect(x) > tol) {
      throw std::domain_error("lie_closure: seed is not Hermitian within tolerance");
    }
    if (std::abs(x.trace()) > tol) {
      throw std::domain_error("lie_closure: seed is not traceless within tolerance");
    }
  }
  if (max_iterations <= 0) max_iterations = static_cast<int>(n * n);

  LieClosureResult result;
  result.dim_space = n;
  result.basis = make_span_basis(n, seeds);

  const Complex minus_i(0.0, -1.0);
  int sweeps = 0;
  for (bool grew = true; grew;) {
    if (sweeps >= max_iterations) {
      throw std::runtime_error("lie_closure: no convergence within " +
                               std::to_string(max_iterations) + " sweeps");
    }
    ++sweeps;
    grew = false;
    const std::size_t snapshot = result.basis.size();
    for (std::size_t a = 0; a < snapshot; ++a) {
      for (std::size_t b = a + 1; b < snapshot; ++b) {
        const CMatrix bracket =
            minus_i * commutator(result.basis.elements[a], result.basis.elements[b]);
        if (try_extend_span(result.basis, bracket)) grew = true;
      }
    }
  }
  result.iterations = sweeps;
  result.dim_algebra = static_cast<int>(result.basis.size());
  if (result.dim_algebra > static_cast<int>(n * n - 1)) {
    throw std::runtime_error("lie_closure: span exceeded n^2 - 1, tolerance breakdown");
  }

  result.constants = structure_constants(result.basis);

  if (n >= 2 && result.dim_algebra == static_cast<int>(n * n - 1)) {
    std::vector<CMatrix> reference;
    const auto gm = standard_gellmann_basis(static_cast<int>(n));
    reference.reserve(gm.lambdas.size());
    const double unit = 1.0 / std::sqrt(2.0);  // HS norm of every Gell-Mann member is sqrt(2)
    for (const auto& l : gm.lambdas) reference.push_back(unit * l);
    result.is_su_n = spans_match(result.basis, reference);
  }
  return result;
}

StructureConstants structure_constants(const SpanBasis& basis) {
  const std::size_t B = basis.size();
  StructureConstants sc;
  sc.size = B;
  sc.f.assign(B * B * B, 0.0);

  const Complex minus_i(0.0, -1.0);
  for (std::size_t a = 0; a < B; ++a) {
    for (std::size_t b = 0; b < B; ++b) {
      const CMatrix bracket = minus_i * commutator(basis.elements[a], basis.elements[b]);
      CMatrix recon = CMatrix::Zero(basis.dim, basis.dim);
      for (std::size_t c = 0; c < B; ++c) {
        const double fc = std::real(hs_inner(basis.elements[c], bracket));
        sc.at(a, b, c) = fc;
        recon += fc * basis.elements[c];
      }
      const double residual = (bracket - recon).norm();
      if (residual > std::max(basis.tol, span_tolerance(bracket.norm()))) {
        throw std::runtime_error("structure_constants: bracket of pair (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ") leaves the span, residual " +
                                 std::to_string(residual));
      }
      sc.max_reconstruction_residual = std::max(sc.max_reconstruction_residual, residual);
    }
  }
  return sc;
}

GroupElementCheck group_element_check(const SpanBasis& basis,
                                      const std::vector<double>& coefficients) {
  if (coefficients.size() != basis.size()) {
    throw std::invalid_argument("group_element_check: coefficient count " +
                                std::to_string(coefficients.size()) + " does not match basis size " +
                                std::to_string(basis.size()));
  }
  CMatrix g = CMatrix::Zero(basis.dim, basis.dim);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    g += coefficients[i] * basis.elements[i];
  }
  const CMatrix u = expm_hermitian(g);

  GroupElementCheck check;
  check.unitarity_residual =
      (u.adjoint() * u - CMatrix::Identity(basis.dim, basis.dim)).norm();
  check.det_deviation = std::abs(u.determinant() - Complex(1.0, 0.0));
  return check;
}

}  // namespace pba
