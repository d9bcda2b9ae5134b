#pragma once

#include "pba/linalg.hpp"

namespace pba {

/// Supercharge set on the 2(s+1)-dimensional atom x field space, atom index
/// outer with the excited block first: global index = atom*(s+1) + n.
///
/// Q has the k-photon ladder block a^k / sqrt(k!) in its upper-right corner.
/// N (half-integer) and Nprime (integer) are diagonal; their entries are the
/// eigenvalues of the untruncated operators, so truncation effects live
/// entirely in the Q blocks and surface as boundary residuals.
struct SusySet {
  int s = 0;
  int k = 1;
  CMatrix N;
  CMatrix Nprime;
  CMatrix Q;
  CMatrix Qdag;
  CMatrix sigma_z;
};

SusySet build_susy_set(int s, int k);

/// One superalgebra relation, with the max-abs residual of LHS - RHS split
/// into the interior sector (both field indices <= s - k in either atom
/// block) and the truncation boundary (everything else).
struct SusyRelation {
  std::string name;
  double interior_residual = 0.0;
  double boundary_residual = 0.0;
  double scale = 0.0;
};

struct SusyAlgebraReport {
  int s = 0;
  int k = 1;
  std::vector<SusyRelation> relations;

  double max_interior_residual() const;
};

SusyAlgebraReport verify_susy_algebra(const SusySet& set);

/// Multiphoton atom-field Hamiltonian on the same doubled space.
/// delta = k*omega - omega0 is the k-photon detuning.
struct JCHamiltonian {
  double omega = 0.0;
  double omega0 = 0.0;
  Complex g;
  int k = 1;
  double delta = 0.0;
  CMatrix H;
};

/// H = omega n + (omega0/2) sigma_z + g adag^k sigma_- + conj(g) a^k sigma_+.
JCHamiltonian build_jc_hamiltonian(double omega, double omega0, Complex g, int k, int s);

/// H = omega N + ((omega - delta)/2) sigma_z + gtilde Qdag + conj(gtilde) Q
///     - omega/2. Equals build_jc_hamiltonian(omega, k*omega - delta, g, k, s)
/// entrywise when gtilde = g sqrt(k!).
JCHamiltonian build_susy_hamiltonian(double omega, double delta, Complex gtilde,
                                     const SusySet& set);

/// Two-dimensional invariant subspace span{|e,m>, |g,m+k>}, 0 <= m <= s-k.
/// Both basis vectors are Nprime eigenvectors with the exact integer
/// eigenvalue C(m+k, k).
struct DoubletSubspace {
  int m = 0;
  int k = 1;
  CMatrix projector;
  double eigenvalue = 0.0;
};

DoubletSubspace doublet_spectrum(const SusySet& set, int m);

/// Residuals of the projected relations
///   P [Q,Qdag] P = C P sigma_z P,  P {Q,Qdag} P = C P,  P (Qdag-Q)^2 P = -C P
/// with C the doublet eigenvalue.
struct QuasialgebraReport {
  double eigenvalue = 0.0;
  double commutator_residual = 0.0;
  double anticommutator_residual = 0.0;
  double square_residual = 0.0;
};

QuasialgebraReport verify_quasialgebra(const SusySet& set, const DoubletSubspace& doublet);

}  // namespace pba
