#include "pba/susy_jc.hpp"

#include "pba/pb_oscillator.hpp"

#include <cmath>

namespace pba {

namespace {

CMatrix ladder_power(const CMatrix& a, int k) {
  CMatrix p = CMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) p = p * a;
  return p;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

SusySet build_susy_set(int s, int k) {
  if (k < 1) throw std::domain_error("build_susy_set: k must be >= 1");
  if (k > s) throw std::domain_error("build_susy_set: k must not exceed s, no doublet fits");
  const int d = s + 1;
  const int D = 2 * d;
  const auto pb = build_pb_operators(s);

  SusySet set;
  set.s = s;
  set.k = k;

  set.Q = CMatrix::Zero(D, D);
  set.Q.block(0, d, d, d) = ladder_power(pb.a, k) / std::sqrt(factorial(k));
  set.Qdag = set.Q.adjoint();

  set.sigma_z = CMatrix::Zero(D, D);
  for (int i = 0; i < d; ++i) {
    set.sigma_z(i, i) = 1.0;
    set.sigma_z(d + i, d + i) = -1.0;
  }

  set.N = CMatrix::Zero(D, D);
  set.Nprime = CMatrix::Zero(D, D);
  for (int m = 0; m <= s; ++m) {
    set.N(m, m) = (2.0 * m + k) / 2.0;              // m + (k-1)/2 + 1/2
    set.N(d + m, d + m) = (2.0 * m - k + 2.0) / 2.0;  // m - (k-1)/2 + 1/2
    set.Nprime(m, m) = static_cast<double>(exact_binomial(m + k, k));
    set.Nprime(d + m, d + m) =
        m >= k ? static_cast<double>(exact_binomial(m, k)) : 0.0;
  }
  return set;
}

double SusyAlgebraReport::max_interior_residual() const {
  double r = 0.0;
  for (const auto& rel : relations) r = std::max(r, rel.interior_residual);
  return r;
}

SusyAlgebraReport verify_susy_algebra(const SusySet& set) {
  const int s = set.s;
  const int k = set.k;
  const int d = s + 1;

  auto interior = [&](Eigen::Index i) { return static_cast<int>(i) % d <= s - k; };

  SusyAlgebraReport report;
  report.s = s;
  report.k = k;

  auto push = [&](const std::string& name, const CMatrix& lhs, const CMatrix& rhs) {
    const CMatrix diff = lhs - rhs;
    SusyRelation rel;
    rel.name = name;
    rel.scale = std::max({1.0, max_abs(lhs), max_abs(rhs)});
    for (Eigen::Index i = 0; i < diff.rows(); ++i) {
      for (Eigen::Index j = 0; j < diff.cols(); ++j) {
        const double v = std::abs(diff(i, j));
        if (interior(i) && interior(j)) {
          rel.interior_residual = std::max(rel.interior_residual, v);
        } else {
          rel.boundary_residual = std::max(rel.boundary_residual, v);
        }
      }
    }
    report.relations.push_back(std::move(rel));
  };

  const CMatrix zero = CMatrix::Zero(2 * d, 2 * d);
  push("Q^2 = 0", set.Q * set.Q, zero);
  push("Qdag^2 = 0", set.Qdag * set.Qdag, zero);
  push("[Q,Qdag] = Nprime sigma_z", commutator(set.Q, set.Qdag), set.Nprime * set.sigma_z);
  push("{Q,Qdag} = Nprime", anticommutator(set.Q, set.Qdag), set.Nprime);
  push("[N,Nprime] = 0", commutator(set.N, set.Nprime), zero);
  push("[N,Q] = -Q", commutator(set.N, set.Q), -set.Q);
  push("[N,Qdag] = Qdag", commutator(set.N, set.Qdag), set.Qdag);
  push("{Q,sigma_z} = 0", anticommutator(set.Q, set.sigma_z), zero);
  push("{Qdag,sigma_z} = 0", anticommutator(set.Qdag, set.sigma_z), zero);
  push("[Q,sigma_z] = -2 Q", commutator(set.Q, set.sigma_z), -2.0 * set.Q);
  push("[Qdag,sigma_z] = 2 Qdag", commutator(set.Qdag, set.sigma_z), 2.0 * set.Qdag);
  push("(Qdag-Q)^2 = -Nprime", (set.Qdag - set.Q) * (set.Qdag - set.Q), -set.Nprime);

  return report;
}

JCHamiltonian build_jc_hamiltonian(double omega, double omega0, Complex g, int k, int s) {
  if (k < 1 || k > s) throw std::domain_error("build_jc_hamiltonian: need s >= k >= 1");
  const int d = s + 1;
  const auto pb = build_pb_operators(s);
  const CMatrix ak = ladder_power(pb.a, k);

  JCHamiltonian jc;
  jc.omega = omega;
  jc.omega0 = omega0;
  jc.g = g;
  jc.k = k;
  jc.delta = k * omega - omega0;

  jc.H = CMatrix::Zero(2 * d, 2 * d);
  for (int m = 0; m <= s; ++m) {
    jc.H(m, m) = omega * m + omega0 / 2.0;
    jc.H(d + m, d + m) = omega * m - omega0 / 2.0;
  }
  jc.H.block(0, d, d, d) = std::conj(g) * ak;          // a^k sigma_+
  jc.H.block(d, 0, d, d) = g * CMatrix(ak.adjoint());  // adag^k sigma_-
  return jc;
}

JCHamiltonian build_susy_hamiltonian(double omega, double delta, Complex gtilde,
                                     const SusySet& set) {
  const int D = 2 * (set.s + 1);

  JCHamiltonian jc;
  jc.omega = omega;
  jc.omega0 = set.k * omega - delta;
  jc.g = gtilde;
  jc.k = set.k;
  jc.delta = delta;
  jc.H = omega * set.N + ((omega - delta) / 2.0) * set.sigma_z + gtilde * set.Qdag +
         std::conj(gtilde) * set.Q - (omega / 2.0) * CMatrix::Identity(D, D);
  return jc;
}

DoubletSubspace doublet_spectrum(const SusySet& set, int m) {
  const int s = set.s;
  const int k = set.k;
  if (m < 0 || m > s - k) {
    throw std::domain_error("doublet_spectrum: need 0 <= m <= s - k");
  }
  const int d = s + 1;

  DoubletSubspace doublet;
  doublet.m = m;
  doublet.k = k;
  doublet.eigenvalue = static_cast<double>(exact_binomial(m + k, k));
  doublet.projector = CMatrix::Zero(2 * d, 2 * d);
  doublet.projector(m, m) = 1.0;                  // |e,m>
  doublet.projector(d + m + k, d + m + k) = 1.0;  // |g,m+k>

  if (std::real(set.Nprime(m, m)) != doublet.eigenvalue ||
      std::real(set.Nprime(d + m + k, d + m + k)) != doublet.eigenvalue) {
    throw std::logic_error("doublet_spectrum: Nprime eigenvalue mismatch");
  }
  return doublet;
}

QuasialgebraReport verify_quasialgebra(const SusySet& set, const DoubletSubspace& doublet) {
  const CMatrix& p = doublet.projector;
  const double c = doublet.eigenvalue;

  QuasialgebraReport report;
  report.eigenvalue = c;
  report.commutator_residual =
      max_abs(p * commutator(set.Q, set.Qdag) * p - c * (p * set.sigma_z * p));
  report.anticommutator_residual =
      max_abs(p * anticommutator(set.Q, set.Qdag) * p - c * p);
  const CMatrix diff = set.Qdag - set.Q;
  report.square_residual = max_abs(p * (diff * diff) * p + c * p);
  return report;
}

}  // namespace pba
