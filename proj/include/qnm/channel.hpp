#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qnm/matrix.hpp"

namespace qnm {

inline constexpr double kChannelTol = 1e-10;
inline constexpr double kKrausCutoff = 1e-12;

/// Completely positive map ρ ↦ Σ K ρ K† given by its Kraus operators (each d_out × d_in).
/// Trace non-increase is not enforced here; see validate_cptni.
class KrausChannel {
 public:
  KrausChannel(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> kraus);

  [[nodiscard]] std::size_t d_in() const { return d_in_; }
  [[nodiscard]] std::size_t d_out() const { return d_out_; }
  [[nodiscard]] const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_; }
  [[nodiscard]] std::size_t num_kraus() const { return kraus_.size(); }

 private:
  std::size_t d_in_;
  std::size_t d_out_;
  std::vector<ComplexMatrix> kraus_;
};

/// J = (Λ ⊗ id) Φ_d on systems (1: output, 2: reference).
class ChoiOperator {
 public:
  ChoiOperator(std::size_t d, ComplexMatrix matrix);

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] const ComplexMatrix& matrix() const { return matrix_; }
  [[nodiscard]] DimsSpec dims() const { return DimsSpec{d_, d_}; }

  /// PSD and trace ≤ 1, both within tol.
  [[nodiscard]] bool is_valid(double tol = kChannelTol) const;

 private:
  std::size_t d_;
  ComplexMatrix matrix_;
};

struct CptniReport {
  bool is_cp = true;
  bool is_tni = false;
  bool is_tp = false;
  double defect = 0.0;  // ‖Σ K†K − 1‖_op
};

KrausChannel identity_channel(std::size_t d);
KrausChannel unitary_channel(const ComplexMatrix& u);

/// ρ ↦ η₀ · tr ρ. Throws ValidationError unless eta0 is a density matrix.
KrausChannel constant_channel(const ComplexMatrix& eta0);

/// ⟨τ⟩: the completely depolarizing channel.
KrausChannel depolarizing_channel(std::size_t d);

/// Σ p_i Λ_i as a single Kraus list.
KrausChannel mix_channels(std::span<const KrausChannel> channels, std::span<const double> probs);

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho);

/// Maximally entangled state Φ_d = (1/d) Σ |ii><jj|.
ComplexMatrix max_entangled(std::size_t d);

ChoiOperator choi_of(const KrausChannel& ch);

/// Kraus form recovered from the eigendecomposition of d·ω; modes at or below 1e-12 are dropped.
KrausChannel channel_from_choi(const ChoiOperator& omega);

/// Λ(ρ) = d · tr₂((1 ⊗ ρᵀ) ω), transpose in the computational basis.
ComplexMatrix apply_choi(const ChoiOperator& omega, const ComplexMatrix& rho);

CptniReport validate_cptni(const KrausChannel& ch, double tol = kChannelTol);

}  // namespace qnm
