#include "qnm/attack.hpp"

#include <cmath>
#include <string>

#include "qnm/weyl.hpp"

namespace qnm {

const ComplexMatrix& EncryptionScheme::key_unitary(std::size_t key) const {
  if (key >= ensemble_.size())
    throw ValidationError("key index " + std::to_string(key) + " out of range (N = " +
                          std::to_string(ensemble_.size()) + ")");
  return ensemble_.unitary(key);
}

void EncryptionScheme::check_input(const ComplexMatrix& m) const {
  const auto d = static_cast<Eigen::Index>(dim());
  if (m.rows() != d || m.cols() != d) throw DimensionError("operator does not match scheme dimension");
}

ComplexMatrix EncryptionScheme::encrypt(std::size_t key, const ComplexMatrix& rho) const {
  check_input(rho);
  const auto& u = key_unitary(key);
  return u * rho * u.adjoint();
}

ComplexMatrix EncryptionScheme::decrypt(std::size_t key, const ComplexMatrix& sigma) const {
  check_input(sigma);
  const auto& u = key_unitary(key);
  return u.adjoint() * sigma * u;
}

ComplexMatrix EncryptionScheme::average_ciphertext(const ComplexMatrix& rho) const {
  check_input(rho);
  ComplexMatrix out = zeros(dim(), dim());
  for (std::size_t k = 0; k < num_keys(); ++k) out += ensemble_.weight(k) * encrypt(k, rho);
  return out;
}

bool EncryptionScheme::is_weyl_scheme() const {
  const auto& m = ensemble_.meta();
  return m.source == "pauli" && m.qudits.value_or(0) == 1 && m.p.value_or(0) == dim();
}

KrausChannel effective_channel(const EncryptionScheme& s, const KrausChannel& adversary) {
  if (adversary.d_in() != s.dim() || adversary.d_out() != s.dim())
    throw DimensionError("adversary dimension does not match the scheme");
  if (!validate_cptni(adversary).is_tni)
    throw ValidationError("adversary channel is not trace non-increasing");
  const auto& e = s.ensemble();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(e.size() * adversary.num_kraus());
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e.weight(k) == 0.0) continue;
    const auto& u = e.unitary(k);
    const double w = std::sqrt(e.weight(k));
    for (const auto& op : adversary.kraus_ops()) kraus.push_back(w * (u.adjoint() * op * u));
  }
  return KrausChannel(s.dim(), s.dim(), std::move(kraus));
}

AttackReport attack_report(const EncryptionScheme& s, const KrausChannel& adversary) {
  const std::size_t d = s.dim();
  ChoiOperator choi = choi_of(effective_channel(s, adversary));
  const auto proj = iso_project(choi.matrix(), d);
  const double one_design = trace_norm(encryption_choi(s.ensemble()) -
                                       identity(d * d) / static_cast<double>(d * d));
  return AttackReport{
      .effective_choi = std::move(choi),
      .decomposition = proj.decomposition,
      .malleability_residual = proj.decomposition.residual,
      .diamond_upper_bound = static_cast<double>(d) * proj.decomposition.residual,
      .scheme_one_design_dist = one_design,
      .constant_channel_is_tau = one_design <= kOneDesignFlagTol,
      .weyl_deviation = std::nullopt,
  };
}

AttackReport pauli_attack(const EncryptionScheme& s, std::size_t a, std::size_t b) {
  const ComplexMatrix w = weyl(WeylIndex(s.dim(), a, b));
  const KrausChannel adversary = unitary_channel(w);
  AttackReport r = attack_report(s, adversary);
  if (s.is_weyl_scheme())
    r.weyl_deviation = max_abs(r.effective_choi.matrix() - choi_of(adversary).matrix());
  return r;
}

}  // namespace qnm
