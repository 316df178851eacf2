#include "qnm/constructions.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <string>

#include "qnm/design.hpp"
#include "qnm/weyl.hpp"

namespace qnm {

std::string_view to_string(SampleSource s) {
  return s == SampleSource::clifford ? "clifford" : "haar";
}

SampleSource parse_sample_source(std::string_view s) {
  if (s == "clifford") return SampleSource::clifford;
  if (s == "haar") return SampleSource::haar;
  throw ValidationError("unknown sample source '" + std::string(s) + "' (expected clifford or haar)");
}

ComplexMatrix fourier_op(std::size_t p) {
  ComplexMatrix f(p, p);
  const double norm = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < p; ++k) f(j, k) = norm * root_of_unity(p, static_cast<long long>(j * k));
  return f;
}

ComplexMatrix quadratic_phase_op(std::size_t p) {
  ComplexMatrix g = zeros(p, p);
  if (p == 2) {
    g(0, 0) = 1.0;
    g(1, 1) = Complex(0.0, 1.0);
    return g;
  }
  const std::size_t half = (p + 1) / 2;  // 2⁻¹ mod p
  for (std::size_t j = 0; j < p; ++j)
    g(j, j) = root_of_unity(p, static_cast<long long>((half * j * j) % p));
  return g;
}

ComplexMatrix canonical_phase(const ComplexMatrix& u) {
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const Complex z = u.data()[i];
    if (std::abs(z) > 1e-6) return (std::conj(z) / std::abs(z)) * u;
  }
  return u;
}

namespace {

using PhaseKey = std::vector<long long>;

// Entries on a 1e-9 grid after phase fixing.
PhaseKey phase_key(const ComplexMatrix& canonical) {
  PhaseKey key;
  key.reserve(2 * canonical.size());
  for (Eigen::Index i = 0; i < canonical.size(); ++i) {
    key.push_back(std::llround(canonical.data()[i].real() * 1e9));
    key.push_back(std::llround(canonical.data()[i].imag() * 1e9));
  }
  return key;
}

}  // namespace

UnitaryEnsemble clifford_prime(std::size_t p) {
  if (!is_prime(p)) throw ValidationError("clifford_prime: " + std::to_string(p) + " is not prime");
  if (p > kCliffordPrimeCap)
    throw ValidationError("clifford_prime: p = " + std::to_string(p) + " exceeds the enumeration cap " +
                          std::to_string(kCliffordPrimeCap));

  const std::vector<ComplexMatrix> generators{fourier_op(p), quadratic_phase_op(p), shift_op(p),
                                              clock_op(p)};
  std::vector<ComplexMatrix> elements;
  std::map<PhaseKey, std::size_t> seen;
  std::deque<std::size_t> frontier;

  auto visit = [&](ComplexMatrix u) {
    u = canonical_phase(u);
    auto key = phase_key(u);
    if (seen.contains(key)) return;
    seen.emplace(std::move(key), elements.size());
    frontier.push_back(elements.size());
    elements.push_back(std::move(u));
  };

  visit(identity(p));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) visit(g * elements[idx]);
  }

  const std::size_t expected = p * p * p * p * p - p * p * p;
  if (elements.size() != expected)
    throw std::logic_error("clifford_prime: enumerated " + std::to_string(elements.size()) +
                           " elements, expected " + std::to_string(expected));
  EnsembleMeta meta{.source = "clifford", .seed = std::nullopt, .n = expected, .p = p, .qudits = 1};
  return UnitaryEnsemble::uniform(p, std::move(elements), std::move(meta));
}

std::mt19937_64 draw_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ComplexMatrix haar_unitary(std::size_t d, std::mt19937_64& rng) {
  if (d < 1) throw DimensionError("haar_unitary: dimension must be positive");
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    g.data()[i] = Complex(re, im);
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (std::size_t j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

UnitaryEnsemble sample_design(const SamplerConfig& cfg) {
  if (cfg.n_samples < 1) throw ValidationError("sample_design: n_samples must be at least 1");
  if (cfg.d < 2) throw ValidationError("sample_design: dimension must be at least 2");
  std::vector<ComplexMatrix> draws;
  draws.reserve(cfg.n_samples);
  if (cfg.source == SampleSource::clifford) {
    const auto group = clifford_prime(cfg.d);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (std::size_t i = 0; i < cfg.n_samples; ++i) {
      auto rng = draw_stream(cfg.seed, i);
      draws.push_back(group.unitary(pick(rng)));
    }
  } else {
    for (std::size_t i = 0; i < cfg.n_samples; ++i) {
      auto rng = draw_stream(cfg.seed, i);
      draws.push_back(haar_unitary(cfg.d, rng));
    }
  }
  EnsembleMeta meta{.source = "sampled:" + std::string(to_string(cfg.source)),
                    .seed = cfg.seed,
                    .n = cfg.n_samples,
                    .p = std::nullopt,
                    .qudits = std::nullopt};
  return UnitaryEnsemble::uniform(cfg.d, std::move(draws), std::move(meta));
}

std::size_t recommended_n(std::size_t d, double theta, double delta) {
  if (d < 2) throw DomainError("recommended_n: dimension must be at least 2");
  if (!(theta > 0.0 && theta <= 0.5)) throw DomainError("recommended_n: theta must lie in (0, 1/2]");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("recommended_n: delta must lie in (0, 1)");
  const double d2 = static_cast<double>(d * d);
  const double mu = 1.0 / (d2 * (d2 - 1.0));
  const double support = static_cast<double>(rank_lower_bound(d));
  return static_cast<std::size_t>(std::ceil(2.0 / (theta * theta * mu) * std::log(2.0 * support / delta)));
}

}  // namespace qnm
