#pragma once

#include "pba/pb_oscillator.hpp"

#include <optional>
#include <vector>

namespace pba {

/// The extra generators that close the ladder algebra at cutoff s:
///   M    = -|s-1><s|          (single entry -1)
///   K    = |s><s| - |s-1><s-1|
///   F    = |s-2><s|           (single entry +1, needs s >= 2)
/// F and Fdag are absent at s = 1 where only two levels exist.
struct NamedGenerators {
  int s = 0;
  CMatrix M;
  CMatrix Mdag;
  CMatrix K;
  std::optional<CMatrix> F;
  std::optional<CMatrix> Fdag;
};

NamedGenerators build_named_generators(int s);

/// Max-abs residual of one commutation relation, LHS - RHS. `scale` is
/// (s+1)*sqrt(s), the largest structure coefficient in the set. `empirical`
/// marks the two relations whose coefficient was established numerically
/// rather than read off a closed form.
struct RelationResidual {
  std::string name;
  double residual = 0.0;
  double scale = 0.0;
  bool empirical = false;
};

/// Evaluates the closing relations of {a, adag, A, M, Mdag, K, F, Fdag} at the
/// generators' cutoff. The F relations are skipped at s = 1.
std::vector<RelationResidual> verify_generator_relations(const NamedGenerators& gen,
                                                         const PBOperators& pb);

struct GellMannBasis {
  int n = 0;
  std::vector<CMatrix> lambdas;
};

/// At s = 2 the ladder set reassembles the eight Gell-Mann matrices:
///   l1 = a + adag + sqrt2 (M + Mdag)      l5 = i (Fdag - F)
///   l2 = i (adag - a + sqrt2 (Mdag - M))  l6 = -(M + Mdag)
///   l3 = A + 2K                           l7 = -i (Mdag - M)
///   l4 = F + Fdag                         l8 = A / sqrt3
GellMannBasis reconstruct_gellmann_s2(const PBOperators& pb, const NamedGenerators& gen);

/// Generalized Gell-Mann basis of su(n): Hermitian, traceless,
/// tr(l_i l_j) = 2 delta_ij. For n = 3 the conventional interleaved order
/// l1..l8 is used; otherwise all symmetric pairs come first, then all
/// antisymmetric pairs (j < k lexicographic), then the diagonal set.
GellMannBasis standard_gellmann_basis(int n);

}  // namespace pba
