#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <cmath>
#include <random>

#include "qnm/channel.hpp"
#include "qnm/constructions.hpp"
#include "qnm/matrix.hpp"

namespace qnm::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(g(rng), g(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  return 0.5 * (a + a.adjoint());
}

/// Mixed state from a Ginibre matrix: G G† / tr.
inline ComplexMatrix random_density(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  const ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

/// Trace non-increasing channel: r Kraus blocks of a random isometry, scaled by √scale.
inline KrausChannel random_channel(std::size_t d, std::size_t r, std::mt19937_64& rng, double scale = 1.0) {
  const ComplexMatrix u = haar_unitary(d * r, rng);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < r; ++i) kraus.push_back(std::sqrt(scale) * u.block(i * d, 0, d, d));
  return KrausChannel(d, d, std::move(kraus));
}

/// Monte-Carlo estimates of ∫dU (U⊗Ū) x (U⊗Ū)† for each x, sharing `samples` Haar draws.
inline std::vector<ComplexMatrix> haar_twirl_mc(const std::vector<ComplexMatrix>& xs, std::size_t d,
                                                std::size_t samples, std::uint64_t seed) {
  std::vector<ComplexMatrix> acc(xs.size(), zeros(d * d, d * d));
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = draw_stream(seed, s);
    const ComplexMatrix u = haar_unitary(d, rng);
    const ComplexMatrix w = kron(u, u.conjugate());
    for (std::size_t i = 0; i < xs.size(); ++i) acc[i].noalias() += w * xs[i] * w.adjoint();
  }
  for (auto& a : acc) a /= static_cast<double>(samples);
  return acc;
}

}  // namespace qnm::testing
