#include "qnm/design.hpp"

#include <cmath>
#include <numbers>

namespace qnm {

namespace {

const double kInvE = 1.0 / std::numbers::e;

void require_qudit(std::size_t d, const char* what) {
  if (d < 2) throw DomainError(std::string(what) + ": dimension must be at least 2");
}

}  // namespace

IsotropicProjection iso_project(const ComplexMatrix& x, std::size_t d) {
  require_qudit(d, "iso_project");
  const auto dd = static_cast<Eigen::Index>(d * d);
  if (x.rows() != dd || x.cols() != dd) throw DimensionError("iso_project: expected a d²×d² operator");
  const ComplexMatrix phi = max_entangled(d);
  const ComplexMatrix rest = identity(d * d) - phi;
  const Complex alpha = (x * phi).trace();
  const Complex beta = (x * rest).trace() / static_cast<double>(d * d - 1);
  IsotropicProjection out;
  out.projected = alpha * phi + beta * rest;
  out.decomposition = {alpha.real(), beta.real(), trace_norm(x - out.projected)};
  return out;
}

ComplexMatrix ideal_choi(std::size_t d) {
  require_qudit(d, "ideal_choi");
  const double d2 = static_cast<double>(d * d);
  const ComplexMatrix phi = max_entangled(d);
  const ComplexMatrix rest = identity(d * d) - phi;
  return kron(phi, phi) / d2 + kron(rest, rest) / (d2 * (d2 - 1.0));
}

ComplexMatrix ensemble_choi(const UnitaryEnsemble& e) {
  const std::size_t d = e.dim();
  const std::size_t d2 = d * d;
  // Column k is √p_k (U_k ⊗ Ū_k ⊗ 1)|Φ_{d²}⟩, i.e. the row-major vec of (U_k ⊗ Ū_k)/d.
  ComplexMatrix cols(d2 * d2, e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    const ComplexMatrix& u = e.unitary(k);
    const double scale = std::sqrt(e.weight(k)) / static_cast<double>(d);
    cols.col(k) = scale * vec(kron(u, u.conjugate()));
  }
  return cols * cols.adjoint();
}

ComplexMatrix encryption_choi(const UnitaryEnsemble& e) {
  const std::size_t d = e.dim();
  ComplexMatrix cols(d * d, e.size());
  for (std::size_t k = 0; k < e.size(); ++k)
    cols.col(k) = std::sqrt(e.weight(k) / static_cast<double>(d)) * vec(e.unitary(k));
  return cols * cols.adjoint();
}

double frame_potential(const UnitaryEnsemble& e) {
  const std::size_t n = e.size();
  std::vector<ComplexVector> flat;
  flat.reserve(n);
  for (const auto& u : e.unitaries()) flat.push_back(vec(u));
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double row = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double t = std::norm(flat[k].dot(flat[l]));  // |tr(U_k† U_l)|²
      row += e.weight(l) * t * t;
    }
    total += e.weight(k) * row;
  }
  return total;
}

double ensemble_entropy(const UnitaryEnsemble& e) {
  double h = 0.0;
  for (double p : e.weights())
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("binary_entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_bound(std::size_t d, double theta) {
  require_qudit(d, "entropy_bound");
  if (!(theta >= 0.0) || theta > kInvE + 1e-15)
    throw DomainError("entropy_bound: theta must lie in [0, 1/e]");
  const double d2 = static_cast<double>(d * d);
  return binary_entropy(1.0 / d2) + 2.0 * (1.0 - 1.0 / d2) * std::log2(d2 - 1.0) -
         4.0 * theta * std::log2(static_cast<double>(d)) - binary_entropy(theta);
}

std::size_t rank_lower_bound(std::size_t d) {
  const std::size_t m = d * d - 1;
  return m * m + 1;
}

std::optional<double> multiplicative_theta(const ComplexMatrix& omega, std::size_t d,
                                           double leakage_tol, double* leakage) {
  require_qudit(d, "multiplicative_theta");
  const auto eig = herm_eig(ideal_choi(d));
  const double cutoff = 1e-12;
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > cutoff) support.push_back(i);

  // Columns of `basis` scaled by λ^{-1/2} span the ideal support: basis† Ω basis is the
  // pseudo-inverse-square-root sandwich restricted to that support.
  const auto r = static_cast<Eigen::Index>(support.size());
  ComplexMatrix basis(omega.rows(), r);
  ComplexMatrix plain(omega.rows(), r);
  for (Eigen::Index j = 0; j < r; ++j) {
    plain.col(j) = eig.vectors.col(support[j]);
    basis.col(j) = plain.col(j) / std::sqrt(eig.values(support[j]));
  }
  const double inside = (plain.adjoint() * omega * plain).trace().real();
  const double leak = std::max(0.0, omega.trace().real() - inside);
  if (leakage) *leakage = leak;
  if (leak > leakage_tol) return std::nullopt;

  const ComplexMatrix sandwich = basis.adjoint() * omega * basis;
  const auto se = herm_eig(sandwich, 1e-8);
  const double lo = se.values(0), hi = se.values(se.values.size() - 1);
  return std::max(std::abs(1.0 - lo), std::abs(hi - 1.0));
}

CertificationReport certify_design(const UnitaryEnsemble& e, double tol) {
  const std::size_t d = e.dim();
  require_qudit(d, "certify_design");
  CertificationReport r;
  r.d = d;
  r.n = e.size();
  r.tol = tol;

  const double dd = static_cast<double>(d);
  const ComplexMatrix tau2 = identity(d * d) / (dd * dd);
  r.one_design_dist = trace_norm(encryption_choi(e) - tau2);

  const ComplexMatrix omega = ensemble_choi(e);
  r.two_design_trace_dist = trace_norm(omega - ideal_choi(d));
  r.diamond_upper_bound = dd * dd * r.two_design_trace_dist;
  r.multiplicative_theta = multiplicative_theta(omega, d, kSupportLeakageTol, &r.support_leakage);
  r.omega_rank = num_rank(omega, kOmegaRankTol);
  r.rank_bound = rank_lower_bound(d);
  r.conjectured_rank_bound = d * d * (d * d - 1);
  r.frame_potential = frame_potential(e);
  r.entropy_bits = ensemble_entropy(e);
  if (r.two_design_trace_dist <= kInvE)
    r.entropy_bound_bits = entropy_bound(d, r.two_design_trace_dist);

  r.passes_1design = r.one_design_dist <= tol;
  r.passes_2design_trace = r.two_design_trace_dist <= tol;
  r.passes_2design_multiplicative = r.multiplicative_theta && *r.multiplicative_theta <= tol;
  return r;
}

}  // namespace qnm
