#pragma once

// Test-only reference implementations, deliberately independent of the
// library's code paths.

#include "pba/linalg.hpp"

#include <random>
#include <vector>

namespace oracles {

// Triple-loop product, no BLAS-style blocking.
inline pba::CMatrix naive_mult(const pba::CMatrix& x, const pba::CMatrix& y) {
  const Eigen::Index n = x.rows();
  const Eigen::Index m = y.cols();
  pba::CMatrix out(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      pba::Complex acc(0.0, 0.0);
      for (Eigen::Index k = 0; k < x.cols(); ++k) acc += x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

inline pba::CMatrix naive_commutator(const pba::CMatrix& x, const pba::CMatrix& y) {
  return naive_mult(x, y) - naive_mult(y, x);
}

// Dimension of the real Lie algebra generated by the seeds under -i[.,.],
// via the span of left-normed bracket words up to the given depth and an SVD
// rank count on the real-vectorized stack.
inline int bruteforce_lie_dimension(const std::vector<pba::CMatrix>& seeds, int depth = 5) {
  const pba::Complex minus_i(0.0, -1.0);
  std::vector<pba::CMatrix> words = seeds;
  std::vector<pba::CMatrix> frontier = seeds;
  for (int t = 0; t < depth; ++t) {
    std::vector<pba::CMatrix> next;
    next.reserve(seeds.size() * frontier.size());
    for (const auto& s : seeds) {
      for (const auto& x : frontier) {
        next.push_back(minus_i * (naive_mult(s, x) - naive_mult(x, s)));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  const Eigen::Index n = seeds.front().rows();
  Eigen::MatrixXd stack(static_cast<Eigen::Index>(words.size()), 2 * n * n);
  for (std::size_t w = 0; w < words.size(); ++w) {
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        stack(static_cast<Eigen::Index>(w), col++) = words[w](i, j).real();
        stack(static_cast<Eigen::Index>(w), col++) = words[w](i, j).imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = 1e-8 * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  return rank;
}

// Closed-form overlap of two phase states: the geometric sum
// (1/(s+1)) sum_n exp(i n (tq - tp)).
inline pba::Complex phase_overlap_series(int s, double theta_p, double theta_q) {
  const double delta = theta_q - theta_p;
  const pba::Complex z = std::polar(1.0, delta);
  if (std::abs(z - pba::Complex(1.0, 0.0)) < 1e-14) return pba::Complex(1.0, 0.0);
  const pba::Complex num = std::pow(z, s + 1) - pba::Complex(1.0, 0.0);
  return num / (z - pba::Complex(1.0, 0.0)) / static_cast<double>(s + 1);
}

inline pba::CMatrix random_hermitian_traceless(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  pba::CMatrix x(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      x(i, j) = pba::Complex(u(rng), u(rng));
    }
  }
  pba::CMatrix h = 0.5 * (x + pba::CMatrix(x.adjoint()));
  h -= (h.trace() / static_cast<double>(n)) * pba::CMatrix::Identity(n, n);
  return h;
}

}  // namespace oracles
