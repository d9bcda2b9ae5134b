#include "pba/gellmann.hpp"

#include <cmath>

namespace pba {

NamedGenerators build_named_generators(int s) {
  if (s < 1) throw std::domain_error("build_named_generators: s must be >= 1");
  const int n = s + 1;

  NamedGenerators gen;
  gen.s = s;
  gen.M = CMatrix::Zero(n, n);
  gen.M(s - 1, s) = -1.0;
  gen.Mdag = gen.M.adjoint();

  gen.K = CMatrix::Zero(n, n);
  gen.K(s, s) = 1.0;
  gen.K(s - 1, s - 1) = -1.0;

  if (s >= 2) {
    CMatrix f = CMatrix::Zero(n, n);
    f(s - 2, s) = 1.0;
    gen.F = f;
    gen.Fdag = f.adjoint();
  }
  return gen;
}

std::vector<RelationResidual> verify_generator_relations(const NamedGenerators& gen,
                                                         const PBOperators& pb) {
  if (gen.s != pb.s) {
    throw std::invalid_argument("verify_generator_relations: cutoff mismatch");
  }
  const int s = gen.s;
  const double c = (s + 1) * std::sqrt(static_cast<double>(s));
  const double scale = c;

  std::vector<RelationResidual> out;
  auto push = [&](const std::string& name, const CMatrix& lhs, const CMatrix& rhs,
                  bool empirical = false) {
    out.push_back({name, max_abs(lhs - rhs), scale, empirical});
  };

  push("[a,A] = (s+1)sqrt(s) M", commutator(pb.a, pb.A), c * gen.M);
  push("[adag,A] = -(s+1)sqrt(s) Mdag", commutator(pb.adag, pb.A), -c * gen.Mdag);
  push("[M,Mdag] = -K", commutator(gen.M, gen.Mdag), -gen.K);
  push("[A,M] = (1+s) M", commutator(pb.A, gen.M), (1.0 + s) * gen.M);
  push("[A,Mdag] = -(1+s) Mdag", commutator(pb.A, gen.Mdag), -(1.0 + s) * gen.Mdag);
  if (gen.F) {
    const double r = std::sqrt(static_cast<double>(s - 1));
    push("[a,M] = -sqrt(s-1) F", commutator(pb.a, gen.M), -r * (*gen.F));
    push("[adag,Mdag] = sqrt(s-1) Fdag", commutator(pb.adag, gen.Mdag), r * (*gen.Fdag));
    push("[K,F] = -F", commutator(gen.K, *gen.F), -(*gen.F));
    push("[K,Fdag] = Fdag", commutator(gen.K, *gen.Fdag), *gen.Fdag);
  }
  push("[M,K] = 2 M", commutator(gen.M, gen.K), 2.0 * gen.M);
  push("[Mdag,K] = -2 Mdag", commutator(gen.Mdag, gen.K), -2.0 * gen.Mdag);

  const double rs = std::sqrt(static_cast<double>(s));
  push("[adag,M] = -sqrt(s) K", commutator(pb.adag, gen.M), -rs * gen.K, true);
  push("[a,Mdag] = sqrt(s) K", commutator(pb.a, gen.Mdag), rs * gen.K, true);

  return out;
}

GellMannBasis reconstruct_gellmann_s2(const PBOperators& pb, const NamedGenerators& gen) {
  if (pb.s != 2 || gen.s != 2 || !gen.F) {
    throw std::domain_error("reconstruct_gellmann_s2: needs cutoff s = 2");
  }
  const Complex i(0.0, 1.0);
  const double r2 = std::sqrt(2.0);

  GellMannBasis basis;
  basis.n = 3;
  basis.lambdas.resize(8);
  basis.lambdas[0] = pb.a + pb.adag + r2 * (gen.M + gen.Mdag);
  basis.lambdas[1] = i * (pb.adag - pb.a + r2 * (gen.Mdag - gen.M));
  basis.lambdas[2] = pb.A + 2.0 * gen.K;
  basis.lambdas[3] = *gen.F + *gen.Fdag;
  basis.lambdas[4] = i * (*gen.Fdag - *gen.F);
  basis.lambdas[5] = -(gen.M + gen.Mdag);
  basis.lambdas[6] = -i * (gen.Mdag - gen.M);
  basis.lambdas[7] = pb.A / std::sqrt(3.0);
  return basis;
}

namespace {

CMatrix symmetric_pair(int n, int j, int k) {
  CMatrix m = CMatrix::Zero(n, n);
  m(j, k) = 1.0;
  m(k, j) = 1.0;
  return m;
}

CMatrix antisymmetric_pair(int n, int j, int k) {
  CMatrix m = CMatrix::Zero(n, n);
  m(j, k) = Complex(0.0, -1.0);
  m(k, j) = Complex(0.0, 1.0);
  return m;
}

CMatrix diagonal_member(int n, int l) {
  CMatrix m = CMatrix::Zero(n, n);
  const double w = std::sqrt(2.0 / (l * (l + 1.0)));
  for (int j = 0; j < l; ++j) m(j, j) = w;
  m(l, l) = -l * w;
  return m;
}

}  // namespace

GellMannBasis standard_gellmann_basis(int n) {
  if (n < 2) throw std::domain_error("standard_gellmann_basis: n must be >= 2");

  GellMannBasis basis;
  basis.n = n;
  basis.lambdas.reserve(static_cast<std::size_t>(n) * n - 1);

  if (n == 3) {
    basis.lambdas.push_back(symmetric_pair(3, 0, 1));
    basis.lambdas.push_back(antisymmetric_pair(3, 0, 1));
    basis.lambdas.push_back(diagonal_member(3, 1));
    basis.lambdas.push_back(symmetric_pair(3, 0, 2));
    basis.lambdas.push_back(antisymmetric_pair(3, 0, 2));
    basis.lambdas.push_back(symmetric_pair(3, 1, 2));
    basis.lambdas.push_back(antisymmetric_pair(3, 1, 2));
    basis.lambdas.push_back(diagonal_member(3, 2));
    return basis;
  }

  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) basis.lambdas.push_back(symmetric_pair(n, j, k));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) basis.lambdas.push_back(antisymmetric_pair(n, j, k));
  for (int l = 1; l < n; ++l) basis.lambdas.push_back(diagonal_member(n, l));
  return basis;
}

}  // namespace pba
