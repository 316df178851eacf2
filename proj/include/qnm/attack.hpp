#pragma once

#include <cstddef>
#include <optional>

#include "qnm/channel.hpp"
#include "qnm/design.hpp"
#include "qnm/ensemble.hpp"

namespace qnm {

inline constexpr double kOneDesignFlagTol = 1e-9;

/// Encryption E_k(ρ) = U_k ρ U_k†, decryption D_k(σ) = U_k† σ U_k, key k drawn with weight p_k.
class EncryptionScheme {
 public:
  explicit EncryptionScheme(UnitaryEnsemble ensemble) : ensemble_(std::move(ensemble)) {}

  [[nodiscard]] const UnitaryEnsemble& ensemble() const { return ensemble_; }
  [[nodiscard]] std::size_t dim() const { return ensemble_.dim(); }
  [[nodiscard]] std::size_t num_keys() const { return ensemble_.size(); }

  [[nodiscard]] ComplexMatrix encrypt(std::size_t key, const ComplexMatrix& rho) const;
  [[nodiscard]] ComplexMatrix decrypt(std::size_t key, const ComplexMatrix& sigma) const;

  /// Σ p_k E_k(ρ): what an adversary without the key sees.
  [[nodiscard]] ComplexMatrix average_ciphertext(const ComplexMatrix& rho) const;

  /// True for single-qudit Weyl-key schemes built by pauli_ensemble(p, 1).
  [[nodiscard]] bool is_weyl_scheme() const;

 private:
  const ComplexMatrix& key_unitary(std::size_t key) const;
  void check_input(const ComplexMatrix& m) const;

  UnitaryEnsemble ensemble_;
};

struct AttackReport {
  ChoiOperator effective_choi;
  IsotropicDecomposition decomposition;
  double malleability_residual = 0.0;       // = decomposition.residual
  double diamond_upper_bound = 0.0;         // d · residual
  double scheme_one_design_dist = 0.0;
  bool constant_channel_is_tau = false;     // scheme is a 1-design within 1e-9, so C = C'
  std::optional<double> weyl_deviation;     // pauli_attack on a Weyl scheme only
};

/// Λ̃(ρ) = Σ p_k U_k† Λ(U_k ρ U_k†) U_k, Kraus ops {√p_k U_k† K U_k}.
/// Throws ValidationError if the adversary is not trace non-increasing.
KrausChannel effective_channel(const EncryptionScheme& s, const KrausChannel& adversary);

/// Effective Choi operator and its distance from the isotropic cone.
AttackReport attack_report(const EncryptionScheme& s, const KrausChannel& adversary);

/// attack_report for conjugation by W(a, b). On Weyl-key schemes also records the max-entry
/// deviation of Choi(Λ̃) from Choi(W(a,b)·W(a,b)†).
AttackReport pauli_attack(const EncryptionScheme& s, std::size_t a, std::size_t b);

}  // namespace qnm
