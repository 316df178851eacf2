#include "qnm/weyl.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace qnm {

UnitaryEnsemble::UnitaryEnsemble(std::size_t d, std::vector<double> weights,
                                 std::vector<ComplexMatrix> unitaries, EnsembleMeta meta,
                                 double unitarity_tol)
    : d_(d), weights_(std::move(weights)), unitaries_(std::move(unitaries)), meta_(std::move(meta)) {
  if (d_ < 1) throw ValidationError("ensemble dimension must be positive");
  if (unitaries_.empty()) throw ValidationError("ensemble is empty");
  if (weights_.size() != unitaries_.size())
    throw ValidationError("ensemble has " + std::to_string(weights_.size()) + " weights for " +
                          std::to_string(unitaries_.size()) + " unitaries");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw ValidationError("ensemble weight is negative or NaN");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) throw ValidationError("ensemble weights do not sum to 1");
  for (std::size_t k = 0; k < unitaries_.size(); ++k) {
    const auto& u = unitaries_[k];
    if (static_cast<std::size_t>(u.rows()) != d_ || static_cast<std::size_t>(u.cols()) != d_)
      throw DimensionError("ensemble element " + std::to_string(k) + " has the wrong shape");
    if (!(unitarity_defect(u) <= unitarity_tol))
      throw ValidationError("ensemble element " + std::to_string(k) + " is not unitary");
  }
}

UnitaryEnsemble UnitaryEnsemble::uniform(std::size_t d, std::vector<ComplexMatrix> unitaries,
                                         EnsembleMeta meta) {
  const std::size_t n = unitaries.size();
  if (n == 0) throw ValidationError("ensemble is empty");
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  return UnitaryEnsemble(d, std::move(w), std::move(unitaries), std::move(meta));
}

WeylIndex::WeylIndex(std::size_t d_, std::size_t a_, std::size_t b_) : d(d_), a(a_), b(b_) {
  if (d < 2) throw ValidationError("Weyl dimension must be at least 2");
  if (a >= d || b >= d) throw ValidationError("Weyl exponents must lie in [0, d)");
}

Complex root_of_unity(std::size_t d, long long k) {
  const long long dd = static_cast<long long>(d);
  const long long r = ((k % dd) + dd) % dd;
  if (r == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

ComplexMatrix shift_op(std::size_t d) {
  ComplexMatrix x = zeros(d, d);
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

ComplexMatrix clock_op(std::size_t d) {
  ComplexMatrix z = zeros(d, d);
  for (std::size_t k = 0; k < d; ++k) z(k, k) = root_of_unity(d, static_cast<long long>(k));
  return z;
}

ComplexMatrix weyl(const WeylIndex& idx) {
  // X^a Z^b |j> = ω^{bj} |j+a>
  ComplexMatrix w = zeros(idx.d, idx.d);
  for (std::size_t j = 0; j < idx.d; ++j)
    w((j + idx.a) % idx.d, j) = root_of_unity(idx.d, static_cast<long long>(idx.b * j));
  return w;
}

Complex weyl_commutation_phase(std::size_t d, std::size_t a, std::size_t b, std::size_t a2,
                               std::size_t b2) {
  const auto lhs = static_cast<long long>(a2 * b) - static_cast<long long>(a * b2);
  return root_of_unity(d, lhs);
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

ComplexMatrix pauli_key_unitary(std::size_t p, std::size_t n, std::size_t key) {
  ComplexMatrix out = identity(1);
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t digit = key % (p * p);
    key /= p * p;
    out = kron(out, weyl(WeylIndex(p, digit % p, digit / p)));
  }
  return out;
}

UnitaryEnsemble pauli_ensemble(std::size_t p, std::size_t n) {
  if (!is_prime(p)) throw ValidationError("pauli_ensemble: " + std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("pauli_ensemble: need at least one qudit");
  std::size_t d = 1, count = 1;
  for (std::size_t q = 0; q < n; ++q) {
    d *= p;
    count *= p * p;
  }
  std::vector<ComplexMatrix> us;
  us.reserve(count);
  for (std::size_t key = 0; key < count; ++key) us.push_back(pauli_key_unitary(p, n, key));
  EnsembleMeta meta{.source = "pauli", .seed = std::nullopt, .n = count, .p = p, .qudits = n};
  return UnitaryEnsemble::uniform(d, std::move(us), std::move(meta));
}

}  // namespace qnm
