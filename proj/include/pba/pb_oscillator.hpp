#pragma once

#include "pba/linalg.hpp"

namespace pba {

/// Ladder operators on the (s+1)-dimensional truncated number-state space.
/// a lowers, adag raises, and their commutator closes on A rather than the
/// identity: A = I - (s+1)|s><s|. `number` is diag(0..s) and equals adag*a up
/// to floating rounding in the sqrt entries.
struct PBOperators {
  int s = 0;
  CMatrix a;
  CMatrix adag;
  CMatrix A;
  CMatrix number;
};

/// Builds the operator set at cutoff s >= 0. A and number use their closed-form
/// integer entries; the ladder products reproduce them only to machine
/// precision once sqrt entries appear.
PBOperators build_pb_operators(int s);

/// Normalized phase state: amplitudes_n = exp(i n theta) / sqrt(s+1).
struct PhaseState {
  int s = 0;
  double theta = 0.0;
  CVector amplitudes;
};

PhaseState phase_state(int s, double theta);

/// <p|q>, antilinear in p. Throws if the cutoffs differ. The (s+1) states at
/// theta_r = theta0 + 2 pi r / (s+1) form an orthonormal family.
Complex phase_overlap(const PhaseState& p, const PhaseState& q);

/// Top-left d x d corners of A, M, K, F at cutoff s. For 1 <= d <= s-1 the
/// A window is the d-dimensional identity and the M, K, F windows vanish
/// exactly, which is how the canonical commutator is recovered on any fixed
/// window as s grows.
struct BosonicWindow {
  int s = 0;
  int d = 0;
  CMatrix A;
  CMatrix M;
  CMatrix K;
  CMatrix F;
};

BosonicWindow bosonic_limit_window(int s, int d);

}  // namespace pba
