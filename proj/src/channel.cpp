#include "qnm/channel.hpp"

#include <cmath>
#include <string>

namespace qnm {

KrausChannel::KrausChannel(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> kraus)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
  if (d_in_ == 0 || d_out_ == 0) throw DimensionError("channel dimensions must be positive");
  if (kraus_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  for (std::size_t i = 0; i < kraus_.size(); ++i) {
    if (static_cast<std::size_t>(kraus_[i].rows()) != d_out_ ||
        static_cast<std::size_t>(kraus_[i].cols()) != d_in_)
      throw DimensionError("Kraus operator " + std::to_string(i) + " has the wrong shape");
  }
}

ChoiOperator::ChoiOperator(std::size_t d, ComplexMatrix matrix) : d_(d), matrix_(std::move(matrix)) {
  if (d_ == 0) throw DimensionError("Choi dimension must be positive");
  if (static_cast<std::size_t>(matrix_.rows()) != d_ * d_ ||
      static_cast<std::size_t>(matrix_.cols()) != d_ * d_)
    throw DimensionError("Choi operator must be d²×d²");
}

bool ChoiOperator::is_valid(double tol) const {
  return is_psd(matrix_, tol) && matrix_.trace().real() <= 1.0 + tol;
}

KrausChannel identity_channel(std::size_t d) { return KrausChannel(d, d, {identity(d)}); }

KrausChannel unitary_channel(const ComplexMatrix& u) {
  if (!is_square(u)) throw DimensionError("unitary_channel: matrix is not square");
  return KrausChannel(u.rows(), u.rows(), {u});
}

KrausChannel constant_channel(const ComplexMatrix& eta0) {
  if (!is_state(eta0)) throw ValidationError("constant_channel: eta0 is not a density matrix");
  const auto d = static_cast<std::size_t>(eta0.rows());
  const auto eig = herm_eig(eta0);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index m = 0; m < eig.values.size(); ++m) {
    const double lambda = eig.values(m);
    if (lambda <= kKrausCutoff) continue;
    const ComplexVector e = std::sqrt(lambda) * eig.vectors.col(m);
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix k = zeros(d, d);
      k.col(j) = e;
      kraus.push_back(std::move(k));
    }
  }
  return KrausChannel(d, d, std::move(kraus));
}

KrausChannel depolarizing_channel(std::size_t d) {
  return constant_channel(identity(d) / static_cast<double>(d));
}

KrausChannel mix_channels(std::span<const KrausChannel> channels, std::span<const double> probs) {
  if (channels.empty() || channels.size() != probs.size())
    throw ValidationError("mix_channels: need one probability per channel");
  const auto d_in = channels.front().d_in(), d_out = channels.front().d_out();
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].d_in() != d_in || channels[i].d_out() != d_out)
      throw DimensionError("mix_channels: channel dimensions differ");
    if (probs[i] < 0.0) throw ValidationError("mix_channels: negative probability");
    const double s = std::sqrt(probs[i]);
    for (const auto& k : channels[i].kraus_ops()) kraus.push_back(s * k);
  }
  return KrausChannel(d_in, d_out, std::move(kraus));
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (static_cast<std::size_t>(rho.rows()) != ch.d_in() ||
      static_cast<std::size_t>(rho.cols()) != ch.d_in())
    throw DimensionError("apply_channel: input has the wrong dimension");
  ComplexMatrix out = zeros(ch.d_out(), ch.d_out());
  for (const auto& k : ch.kraus_ops()) out.noalias() += k * rho * k.adjoint();
  return out;
}

ComplexMatrix max_entangled(std::size_t d) {
  if (d < 1) throw DimensionError("max_entangled: dimension must be positive");
  ComplexMatrix phi = zeros(d * d, d * d);
  const double w = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) phi(i * d + i, j * d + j) = w;
  return phi;
}

ChoiOperator choi_of(const KrausChannel& ch) {
  if (ch.d_in() != ch.d_out()) throw DimensionError("choi_of: only d_in == d_out is supported");
  const std::size_t d = ch.d_in();
  // Entry ((i,j),(i',j')) = (1/d) Σ_K K[i][j] conj(K[i'][j']).
  ComplexMatrix j = zeros(d * d, d * d);
  for (const auto& k : ch.kraus_ops()) {
    const ComplexVector v = vec(k);
    j.noalias() += v * v.adjoint();
  }
  j /= static_cast<double>(d);
  return ChoiOperator(d, std::move(j));
}

KrausChannel channel_from_choi(const ChoiOperator& omega) {
  if (!is_psd(omega.matrix(), kChannelTol))
    throw ValidationError("channel_from_choi: Choi operator is not positive semidefinite");
  const std::size_t d = omega.dim();
  const auto eig = herm_eig(static_cast<double>(d) * omega.matrix(), kChannelTol * d);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index m = eig.values.size(); m-- > 0;) {
    const double lambda = eig.values(m);
    if (lambda <= kKrausCutoff) break;
    const ComplexVector v = std::sqrt(lambda) * eig.vectors.col(m);
    kraus.emplace_back(Eigen::Map<const ComplexMatrix>(v.data(), d, d));
  }
  if (kraus.empty()) kraus.push_back(zeros(d, d));
  return KrausChannel(d, d, std::move(kraus));
}

ComplexMatrix apply_choi(const ChoiOperator& omega, const ComplexMatrix& rho) {
  const std::size_t d = omega.dim();
  if (static_cast<std::size_t>(rho.rows()) != d || static_cast<std::size_t>(rho.cols()) != d)
    throw DimensionError("apply_choi: input has the wrong dimension");
  const ComplexMatrix lifted = kron(identity(d), rho.transpose()) * omega.matrix();
  return static_cast<double>(d) * partial_trace(lifted, omega.dims(), {0});
}

CptniReport validate_cptni(const KrausChannel& ch, double tol) {
  ComplexMatrix s = zeros(ch.d_in(), ch.d_in());
  for (const auto& k : ch.kraus_ops()) s.noalias() += k.adjoint() * k;
  const ComplexMatrix gap = s - identity(ch.d_in());
  CptniReport r;
  r.defect = operator_norm(gap);
  r.is_tp = r.defect <= tol;
  // Σ K†K ≤ 1  ⟺  the largest eigenvalue of the gap is ≤ 0.
  const auto eig = herm_eig(gap, 1e-8);
  r.is_tni = eig.values(eig.values.size() - 1) <= tol;
  return r;
}

}  // namespace qnm
