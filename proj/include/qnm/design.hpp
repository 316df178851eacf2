#pragma once

#include <cstddef>
#include <optional>

#include "qnm/channel.hpp"
#include "qnm/ensemble.hpp"
#include "qnm/matrix.hpp"

namespace qnm {

inline constexpr double kSupportLeakageTol = 1e-9;
inline constexpr double kOmegaRankTol = 1e-10;

/// Coordinates of a bipartite operator in span{Φ_d, 1 − Φ_d}.
struct IsotropicDecomposition {
  double alpha = 0.0;
  double beta = 0.0;
  double residual = 0.0;  // ‖x − αΦ_d − β(1 − Φ_d)‖₁
};

struct IsotropicProjection {
  IsotropicDecomposition decomposition;
  ComplexMatrix projected;
};

struct CertificationReport {
  std::size_t d = 0;
  std::size_t n = 0;
  double one_design_dist = 0.0;
  double two_design_trace_dist = 0.0;
  double diamond_upper_bound = 0.0;           // d² · two_design_trace_dist
  std::optional<double> multiplicative_theta; // empty when Ω leaks off the ideal support
  double support_leakage = 0.0;
  std::size_t omega_rank = 0;
  std::size_t rank_bound = 0;                 // (d²−1)²+1
  std::size_t conjectured_rank_bound = 0;     // d²(d²−1), informational only
  double frame_potential = 0.0;
  double entropy_bits = 0.0;
  std::optional<double> entropy_bound_bits;   // at θ = two_design_trace_dist, when θ ≤ 1/e
  double tol = 0.0;
  bool passes_1design = false;
  bool passes_2design_trace = false;
  bool passes_2design_multiplicative = false;
};

/// αΦ_d + β(1−Φ_d) with α = tr(xΦ_d), β = tr(x(1−Φ_d))/(d²−1): the Haar U⊗Ū twirl of x.
IsotropicProjection iso_project(const ComplexMatrix& x, std::size_t d);

/// Closed-form Choi operator of the Haar twirl on systems 12 ⊗ 1'2'.
ComplexMatrix ideal_choi(std::size_t d);

/// Ω = Σ p_k (U_k ⊗ Ū_k ⊗ 1) Φ_{d²} (U_k ⊗ Ū_k ⊗ 1)†.
ComplexMatrix ensemble_choi(const UnitaryEnsemble& e);

/// Σ p_k (U_k ⊗ 1) Φ_d (U_k ⊗ 1)†: Choi operator of the average encryption channel.
ComplexMatrix encryption_choi(const UnitaryEnsemble& e);

/// Σ_{k,l} p_k p_l |tr(U_k† U_l)|⁴. Equals 2 exactly on 2-designs.
double frame_potential(const UnitaryEnsemble& e);

/// Shannon entropy of the key distribution in bits.
double ensemble_entropy(const UnitaryEnsemble& e);

/// Binary entropy in bits, H₂(0) = H₂(1) = 0.
double binary_entropy(double x);

/// H₂(1/d²) + 2(1−1/d²)log₂(d²−1) − 4θ log₂ d − H₂(θ), for 0 ≤ θ ≤ 1/e.
double entropy_bound(std::size_t d, double theta);

/// (d²−1)²+1
std::size_t rank_lower_bound(std::size_t d);

/// Multiplicative deviation θ with (1−θ)Ω_ideal ≤ Ω ≤ (1+θ)Ω_ideal, or empty if Ω leaves the
/// support of Ω_ideal by more than `leakage_tol` in trace. `leakage` receives that trace.
std::optional<double> multiplicative_theta(const ComplexMatrix& omega, std::size_t d,
                                           double leakage_tol = kSupportLeakageTol,
                                           double* leakage = nullptr);

CertificationReport certify_design(const UnitaryEnsemble& e, double tol);

}  // namespace qnm
