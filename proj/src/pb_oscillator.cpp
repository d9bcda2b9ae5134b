#include "pba/pb_oscillator.hpp"

#include "pba/gellmann.hpp"

#include <cmath>

namespace pba {

PBOperators build_pb_operators(int s) {
  if (s < 0) throw std::domain_error("build_pb_operators: s must be >= 0");
  const int n = s + 1;

  PBOperators ops;
  ops.s = s;
  ops.a = CMatrix::Zero(n, n);
  for (int col = 1; col <= s; ++col) {
    ops.a(col - 1, col) = std::sqrt(static_cast<double>(col));
  }
  ops.adag = ops.a.adjoint();

  ops.A = CMatrix::Identity(n, n);
  ops.A(s, s) = 1.0 - static_cast<double>(n);

  ops.number = CMatrix::Zero(n, n);
  for (int m = 0; m <= s; ++m) ops.number(m, m) = static_cast<double>(m);

  return ops;
}

PhaseState phase_state(int s, double theta) {
  if (s < 0) throw std::domain_error("phase_state: s must be >= 0");
  PhaseState st;
  st.s = s;
  st.theta = theta;
  st.amplitudes.resize(s + 1);
  const double r = 1.0 / std::sqrt(static_cast<double>(s + 1));
  for (int n = 0; n <= s; ++n) {
    st.amplitudes(n) = std::polar(r, n * theta);
  }
  return st;
}

Complex phase_overlap(const PhaseState& p, const PhaseState& q) {
  if (p.s != q.s) {
    throw std::invalid_argument("phase_overlap: states live at different cutoffs");
  }
  return p.amplitudes.dot(q.amplitudes);
}

BosonicWindow bosonic_limit_window(int s, int d) {
  if (d < 1 || d > s - 1) {
    throw std::domain_error("bosonic_limit_window: need 1 <= d <= s-1");
  }
  const auto pb = build_pb_operators(s);
  const auto gen = build_named_generators(s);

  BosonicWindow w;
  w.s = s;
  w.d = d;
  w.A = pb.A.topLeftCorner(d, d);
  w.M = gen.M.topLeftCorner(d, d);
  w.K = gen.K.topLeftCorner(d, d);
  w.F = gen.F ? CMatrix(gen.F->topLeftCorner(d, d)) : CMatrix::Zero(d, d);
  return w;
}

}  // namespace pba
