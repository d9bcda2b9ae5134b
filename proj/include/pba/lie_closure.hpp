#pragma once

#include "pba/gellmann.hpp"

namespace pba {

/// Real structure constants f[a][b][c] of a closed basis under the bracket
/// -i[.,.], stored dense: -i[T_a, T_b] = sum_c f[a][b][c] T_c.
struct StructureConstants {
  std::size_t size = 0;
  std::vector<double> f;
  double max_reconstruction_residual = 0.0;

  double at(std::size_t a, std::size_t b, std::size_t c) const {
    return f[(a * size + b) * size + c];
  }
  double& at(std::size_t a, std::size_t b, std::size_t c) {
    return f[(a * size + b) * size + c];
  }
};

struct LieClosureResult {
  Eigen::Index dim_space = 0;
  int dim_algebra = 0;
  SpanBasis basis;
  StructureConstants constants;
  int iterations = 0;  // sweeps, including the final growth-free one
  bool is_su_n = false;
};

/// Hermitian seed set {a + adag, i(adag - a), A} spanning the same operators
/// as {a, adag, A}.
std::vector<CMatrix> hermitian_seeds(const PBOperators& pb);

/// Closes the real Lie algebra generated by Hermitian traceless seeds under
/// -i[.,.]. Sweeps every ordered pair (a < b) of the basis as of the sweep
/// start; elements appended mid-sweep join subsequent sweeps. Terminates on
/// the first growth-free sweep, or throws after max_iterations sweeps
/// (default dim^2). is_su_n requires both the dimension count n^2 - 1 and
/// mutual span agreement with the generalized Gell-Mann basis.
LieClosureResult lie_closure(const std::vector<CMatrix>& seeds, int max_iterations = 0);

/// Structure constants of an orthonormal closed basis; throws std::runtime_error
/// naming the offending pair when some bracket leaves the span.
StructureConstants structure_constants(const SpanBasis& basis);

struct GroupElementCheck {
  double unitarity_residual = 0.0;  // ||U^dag U - I||_F
  double det_deviation = 0.0;       // |det U - 1|
};

/// Exponentiates G = sum_i c_i T_i and reports how far exp(iG) is from the
/// special unitary group.
GroupElementCheck group_element_check(const SpanBasis& basis,
                                      const std::vector<double>& coefficients);

}  // namespace pba
