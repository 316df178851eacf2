#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "qnm/ensemble.hpp"
#include "qnm/matrix.hpp"

namespace qnm {

inline constexpr std::size_t kCliffordPrimeCap = 5;

enum class SampleSource { clifford, haar };

std::string_view to_string(SampleSource s);
SampleSource parse_sample_source(std::string_view s);

struct SamplerConfig {
  std::size_t d = 2;
  std::size_t n_samples = 1;
  std::uint64_t seed = 0;
  SampleSource source = SampleSource::clifford;
};

/// Discrete Fourier transform F|k> = p^{-1/2} Σ_j ω^{jk} |j>.
ComplexMatrix fourier_op(std::size_t p);

/// Quadratic phase gate: diag(1, i) for p = 2, diag(ω^{j²/2}) for odd p.
ComplexMatrix quadratic_phase_op(std::size_t p);

/// Global phase fixed so the first entry of magnitude > 1e-6 (row-major) is positive real.
ComplexMatrix canonical_phase(const ComplexMatrix& u);

/// Single-qudit Clifford group modulo phases at prime p ≤ 5: p⁵ − p³ elements, uniform weights.
/// Breadth-first closure of {F, D, X, Z} starting from the identity.
UnitaryEnsemble clifford_prime(std::size_t p);

/// Independent stream for draw `index` under `seed`.
std::mt19937_64 draw_stream(std::uint64_t seed, std::uint64_t index);

/// Haar-random d×d unitary: QR of a complex Ginibre matrix with R-diagonal phases removed.
ComplexMatrix haar_unitary(std::size_t d, std::mt19937_64& rng);

/// Uniform ensemble of N i.i.d. draws (with repetition) from the Clifford group or Haar measure.
UnitaryEnsemble sample_design(const SamplerConfig& cfg);

/// ceil((2 / (θ² μ)) · ln(2((d²−1)²+1)/δ)) with μ = 1/(d²(d²−1)). Heuristic: the constant in
/// the operator Chernoff bound is not pinned down, so measured θ is what certifies a sample.
std::size_t recommended_n(std::size_t d, double theta, double delta);

}  // namespace qnm
