#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pba/gellmann.hpp"

using namespace pba;

TEST_CASE("named generators at s = 2 have the closed-form entries") {
  const auto gen = build_named_generators(2);
  CMatrix M = CMatrix::Zero(3, 3), K = CMatrix::Zero(3, 3), F = CMatrix::Zero(3, 3);
  M(1, 2) = -1.0;
  K(2, 2) = 1.0;
  K(1, 1) = -1.0;
  F(0, 2) = 1.0;

  CHECK(max_abs(gen.M - M) == 0.0);
  CHECK(max_abs(gen.Mdag - M.adjoint()) == 0.0);
  CHECK(max_abs(gen.K - K) == 0.0);
  REQUIRE(gen.F);
  CHECK(max_abs(*gen.F - F) == 0.0);
  CHECK(max_abs(*gen.Fdag - F.adjoint()) == 0.0);
}

TEST_CASE("generator sparsity pattern for general cutoffs") {
  for (int s = 2; s <= 10; ++s) {
    const auto gen = build_named_generators(s);
    CHECK(gen.M(s - 1, s) == Complex(-1.0, 0.0));
    CHECK(gen.M.cwiseAbs().sum() == 1.0);
    CHECK(gen.K(s, s) == Complex(1.0, 0.0));
    CHECK(gen.K(s - 1, s - 1) == Complex(-1.0, 0.0));
    CHECK(gen.K.cwiseAbs().sum() == 2.0);
    CHECK((*gen.F)(s - 2, s) == Complex(1.0, 0.0));
    CHECK(gen.F->cwiseAbs().sum() == 1.0);
    CHECK(std::abs(gen.K.trace()) == 0.0);
  }
}

TEST_CASE("two-level cutoff has no room for F") {
  const auto gen = build_named_generators(1);
  CHECK(gen.M(0, 1) == Complex(-1.0, 0.0));
  CHECK_FALSE(gen.F);
  CHECK_FALSE(gen.Fdag);
  CHECK_THROWS_AS(build_named_generators(0), std::domain_error);
}

TEST_CASE("generators re-emerge from the ladder commutators") {
  for (int s = 2; s <= 8; ++s) {
    const auto pb = build_pb_operators(s);
    const auto gen = build_named_generators(s);
    const double c = (s + 1) * std::sqrt(static_cast<double>(s));

    CHECK(max_abs(commutator(pb.a, pb.A) / c - gen.M) < 1e-13);
    CHECK(max_abs(-commutator(gen.M, gen.Mdag) - gen.K) == 0.0);
    CHECK(max_abs(-commutator(pb.a, gen.M) / std::sqrt(s - 1.0) - *gen.F) < 1e-13);
  }
}

TEST_CASE("relation residuals vanish identically at s = 2") {
  const auto pb = build_pb_operators(2);
  const auto gen = build_named_generators(2);
  const auto relations = verify_generator_relations(gen, pb);
  REQUIRE(relations.size() == 13);
  for (const auto& rel : relations) {
    INFO(rel.name);
    CHECK(rel.residual == 0.0);
    CHECK(rel.scale == doctest::Approx(3.0 * std::sqrt(2.0)));
  }
  int empirical = 0;
  for (const auto& rel : relations) empirical += rel.empirical ? 1 : 0;
  CHECK(empirical == 2);
}

TEST_CASE("relation residuals stay at rounding level for larger cutoffs") {
  for (int s : {3, 5, 10}) {
    const auto pb = build_pb_operators(s);
    const auto gen = build_named_generators(s);
    for (const auto& rel : verify_generator_relations(gen, pb)) {
      INFO("s=" << s << " " << rel.name);
      CHECK(rel.residual < 1e-12 * rel.scale);
    }
  }
}

TEST_CASE("relation set against the triple-loop oracle at s = 4") {
  const auto pb = build_pb_operators(4);
  const auto gen = build_named_generators(4);
  const double c = 5.0 * std::sqrt(4.0);
  const double scale = c;

  struct Case {
    CMatrix lhs, rhs;
  };
  const std::vector<Case> cases = {
      {oracles::naive_commutator(pb.a, pb.A), c * gen.M},
      {oracles::naive_commutator(gen.M, gen.Mdag), -gen.K},
      {oracles::naive_commutator(pb.A, gen.M), 5.0 * gen.M},
      {oracles::naive_commutator(pb.a, gen.M), -std::sqrt(3.0) * (*gen.F)},
      {oracles::naive_commutator(gen.K, *gen.F), -(*gen.F)},
      {oracles::naive_commutator(gen.M, gen.K), 2.0 * gen.M},
      {oracles::naive_commutator(pb.adag, gen.M), -2.0 * gen.K},
  };
  for (const auto& c_ : cases) CHECK(max_abs(c_.lhs - c_.rhs) < 1e-13 * scale);
}

TEST_CASE("two-level relation subset") {
  const auto pb = build_pb_operators(1);
  const auto gen = build_named_generators(1);
  const auto relations = verify_generator_relations(gen, pb);
  REQUIRE(relations.size() == 9);  // four F relations dropped
  for (const auto& rel : relations) {
    INFO(rel.name);
    CHECK(rel.residual == 0.0);
  }
  CHECK_THROWS_AS(verify_generator_relations(gen, build_pb_operators(2)),
                  std::invalid_argument);
}

TEST_CASE("ladder combinations reassemble the Gell-Mann matrices") {
  const auto pb = build_pb_operators(2);
  const auto gen = build_named_generators(2);
  const auto rebuilt = reconstruct_gellmann_s2(pb, gen);
  const auto standard = standard_gellmann_basis(3);

  REQUIRE(rebuilt.lambdas.size() == 8);
  REQUIRE(standard.lambdas.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    INFO("lambda_" << i + 1);
    CHECK(max_abs(rebuilt.lambdas[i] - standard.lambdas[i]) < 1e-12);
  }

  CMatrix l3 = CMatrix::Zero(3, 3);
  l3(0, 0) = 1.0;
  l3(1, 1) = -1.0;
  CHECK(max_abs(rebuilt.lambdas[2] - l3) == 0.0);
  CHECK(rebuilt.lambdas[7](2, 2) == Complex(-2.0 / std::sqrt(3.0), 0.0));

  CHECK_THROWS_AS(reconstruct_gellmann_s2(build_pb_operators(3), gen), std::domain_error);
}

TEST_CASE("generalized basis is Hermitian, traceless, and HS-normalized") {
  for (int n : {2, 3, 4, 6}) {
    const auto basis = standard_gellmann_basis(n);
    REQUIRE(static_cast<int>(basis.lambdas.size()) == n * n - 1);
    for (std::size_t i = 0; i < basis.lambdas.size(); ++i) {
      CHECK(hermiticity_defect(basis.lambdas[i]) == 0.0);
      CHECK(std::abs(basis.lambdas[i].trace()) < 1e-14);
      for (std::size_t j = 0; j < basis.lambdas.size(); ++j) {
        const double expected = i == j ? 2.0 : 0.0;
        CHECK(std::abs(hs_inner(basis.lambdas[i], basis.lambdas[j]) - expected) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(standard_gellmann_basis(1), std::domain_error);
}

TEST_CASE("n = 2 reduces to the Pauli matrices") {
  const auto basis = standard_gellmann_basis(2);
  CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  const Complex I(0.0, 1.0);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  CHECK(max_abs(basis.lambdas[0] - s1) == 0.0);
  CHECK(max_abs(basis.lambdas[1] - s2) == 0.0);
  CHECK(max_abs(basis.lambdas[2] - s3) == 0.0);
}
