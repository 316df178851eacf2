#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnm/matrix.hpp"

namespace qnm {

inline constexpr double kWeightSumTol = 1e-12;
inline constexpr double kUnitarityIngestTol = 1e-8;

/// Generator provenance carried alongside an ensemble and into files.
struct EnsembleMeta {
  std::string source;                 // "pauli", "clifford", "sampled:clifford", "sampled:haar", ...
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;       // number of unitaries as generated
  std::optional<std::size_t> p;       // prime for pauli/clifford builders
  std::optional<std::size_t> qudits;  // tensor factors for pauli builders
};

/// Weighted list {p_k, U_k} of d×d unitaries: the key distribution of an encryption scheme.
class UnitaryEnsemble {
 public:
  /// Validates weights (nonnegative, sum 1) and unitarity of every element.
  UnitaryEnsemble(std::size_t d, std::vector<double> weights, std::vector<ComplexMatrix> unitaries,
                  EnsembleMeta meta = {}, double unitarity_tol = kUnitarityIngestTol);

  /// Equal weights 1/N.
  static UnitaryEnsemble uniform(std::size_t d, std::vector<ComplexMatrix> unitaries,
                                 EnsembleMeta meta = {});

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] std::size_t size() const { return unitaries_.size(); }
  [[nodiscard]] const std::vector<double>& weights() const { return weights_; }
  [[nodiscard]] const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  [[nodiscard]] double weight(std::size_t k) const { return weights_.at(k); }
  [[nodiscard]] const ComplexMatrix& unitary(std::size_t k) const { return unitaries_.at(k); }
  [[nodiscard]] const EnsembleMeta& meta() const { return meta_; }

 private:
  std::size_t d_;
  std::vector<double> weights_;
  std::vector<ComplexMatrix> unitaries_;
  EnsembleMeta meta_;
};

}  // namespace qnm
