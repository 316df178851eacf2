#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qnm/constructions.hpp"
#include "qnm/design.hpp"
#include "qnm/weyl.hpp"
#include "support.hpp"

using namespace qnm;
using qnm::testing::haar_twirl_mc;
using qnm::testing::random_density;
using qnm::testing::random_matrix;

namespace {

UnitaryEnsemble singleton(std::size_t d) { return UnitaryEnsemble::uniform(d, {identity(d)}); }

std::vector<UnitaryEnsemble> shipped_ensembles() {
  std::vector<UnitaryEnsemble> out;
  for (std::size_t p : {2, 3, 5}) out.push_back(clifford_prime(p));
  out.push_back(pauli_ensemble(2, 1));
  out.push_back(pauli_ensemble(3, 1));
  out.push_back(pauli_ensemble(2, 2));
  out.push_back(singleton(2));
  out.push_back(sample_design({.d = 2, .n_samples = 500, .seed = 3, .source = SampleSource::clifford}));
  out.push_back(sample_design({.d = 2, .n_samples = 200, .seed = 4, .source = SampleSource::haar}));
  return out;
}

}  // namespace

TEST(MaxEntangled, QubitEntries) {
  const ComplexMatrix phi = max_entangled(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
      EXPECT_EQ(phi(i, j), Complex(corner ? 0.5 : 0.0, 0.0));
    }
  EXPECT_NEAR(phi.trace().real(), 1.0, 1e-15);
  EXPECT_EQ(num_rank(phi), 1u);
}

TEST(MaxEntangled, InvariantUnderUTensorUBar) {
  std::mt19937_64 rng(12);
  for (std::size_t d : {2, 3, 4}) {
    const ComplexMatrix u = haar_unitary(d, rng);
    const ComplexMatrix w = kron(u, u.conjugate());
    EXPECT_LE(max_abs(w * max_entangled(d) * w.adjoint() - max_entangled(d)), 1e-14);
  }
}

TEST(IsoProject, FixedPointsAndKnownCoefficients) {
  const auto phi = iso_project(max_entangled(3), 3).decomposition;
  EXPECT_NEAR(phi.alpha, 1.0, 1e-15);
  EXPECT_NEAR(phi.beta, 0.0, 1e-15);
  EXPECT_NEAR(phi.residual, 0.0, 1e-14);

  const auto id = iso_project(identity(9), 3);
  EXPECT_NEAR(id.decomposition.alpha, 1.0, 1e-15);
  EXPECT_NEAR(id.decomposition.beta, 1.0, 1e-15);
  EXPECT_LE(max_abs(id.projected - identity(9)), 1e-15);

  const auto zz = iso_project(ket_bra(4, 0, 0), 2).decomposition;
  EXPECT_NEAR(zz.alpha, 0.5, 1e-15);
  EXPECT_NEAR(zz.beta, 1.0 / 6.0, 1e-15);
}

TEST(IsoProject, DimensionMismatch) { EXPECT_THROW(iso_project(identity(5), 2), DimensionError); }

TEST(IsoProject, Idempotent) {
  std::mt19937_64 rng(13);
  for (std::size_t d : {2, 3}) {
    const ComplexMatrix x = random_matrix(d * d, d * d, rng);
    const auto once = iso_project(x, d).projected;
    EXPECT_LE(max_abs(iso_project(once, d).projected - once), 1e-12);
    EXPECT_LE(iso_project(once, d).decomposition.residual, 1e-10);
  }
}

TEST(IsoProject, ResidualVanishesOnTwirlInvariantInputs) {
  // Any ensemble-averaged operator under the Clifford twirl is isotropic.
  std::mt19937_64 rng(14);
  const auto cliff = clifford_prime(3);
  const ComplexMatrix x = random_density(9, rng);
  ComplexMatrix twirled = zeros(9, 9);
  for (const auto& u : cliff.unitaries()) {
    const ComplexMatrix w = kron(u, u.conjugate());
    twirled += w * x * w.adjoint() / static_cast<double>(cliff.size());
  }
  EXPECT_LE(iso_project(twirled, 3).decomposition.residual, 1e-10);
}

constexpr std::size_t kTwirlSamples = 100000;

TEST(IsoProject, MonteCarloHaarTwirlOfProductState) {
  const auto mc = haar_twirl_mc({ket_bra(4, 0, 0)}, 2, kTwirlSamples, 101);
  const auto proj = iso_project(ket_bra(4, 0, 0), 2);
  const auto from_mc = iso_project(mc[0], 2).decomposition;
  EXPECT_NEAR(from_mc.alpha, 0.5, 2e-3);
  EXPECT_NEAR(from_mc.beta, 1.0 / 6.0, 2e-3);
  EXPECT_LE(trace_norm(mc[0] - proj.projected), 2e-3);
}

// Ten Hilbert-Schmidt random states on C^d ⊗ C^d per dimension.
void check_random_inputs_against_mc(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ComplexMatrix> inputs;
  for (int i = 0; i < 10; ++i) inputs.push_back(random_density(d * d, rng));
  const auto mc = haar_twirl_mc(inputs, d, kTwirlSamples, 200 + d);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    EXPECT_LE(trace_norm(mc[i] - iso_project(inputs[i], d).projected), 2e-3) << "input " << i;
}

TEST(IsoProject, MonteCarloHaarTwirlQubitPairs) { check_random_inputs_against_mc(2, 15); }
TEST(IsoProject, MonteCarloHaarTwirlQutritPairs) { check_random_inputs_against_mc(3, 16); }

TEST(IdealChoi, TraceRankAndMarginal) {
  for (std::size_t d : {2, 3}) {
    const ComplexMatrix omega = ideal_choi(d);
    EXPECT_NEAR(omega.trace().real(), 1.0, 1e-14);
    EXPECT_EQ(num_rank(omega, 1e-10), rank_lower_bound(d));
    const ComplexMatrix tau2 = identity(d * d) / static_cast<double>(d * d);
    EXPECT_LE(max_abs(partial_trace(omega, {d, d, d, d}, {0, 1}) - tau2), 1e-15);
  }
}

TEST(EnsembleChoi, SingletonIsMaximallyEntangledOnPairs) {
  for (std::size_t d : {2, 3}) EXPECT_LE(max_abs(ensemble_choi(singleton(d)) - max_entangled(d * d)), 1e-15);
}

TEST(EnsembleChoi, PsdTraceOne) {
  for (const auto& e : shipped_ensembles()) {
    const ComplexMatrix omega = ensemble_choi(e);
    EXPECT_TRUE(is_psd(omega));
    EXPECT_NEAR(omega.trace().real(), 1.0, 1e-12);
  }
}

TEST(EnsembleChoi, CliffordMatchesIdeal) {
  EXPECT_LE(trace_norm(ensemble_choi(clifford_prime(2)) - ideal_choi(2)), 1e-10);
}

TEST(EnsembleChoi, PurityEqualsFramePotentialOverD4) {
  // tr Ω² = Σ p_k p_l |tr(U_k† U_l)|⁴ / d⁴: ties the Choi route to the frame-potential route.
  for (const auto& e : shipped_ensembles()) {
    const ComplexMatrix omega = ensemble_choi(e);
    const double d4 = std::pow(static_cast<double>(e.dim()), 4);
    EXPECT_NEAR((omega * omega).trace().real() * d4, frame_potential(e), 1e-9);
  }
}

TEST(CertifyDesign, Clifford2) {
  const auto r = certify_design(clifford_prime(2), 1e-9);
  EXPECT_EQ(r.n, 24u);
  EXPECT_LE(r.two_design_trace_dist, 1e-10);
  ASSERT_TRUE(r.multiplicative_theta.has_value());
  EXPECT_LE(*r.multiplicative_theta, 1e-9);
  EXPECT_EQ(r.omega_rank, 10u);
  EXPECT_EQ(r.rank_bound, 10u);
  EXPECT_EQ(r.conjectured_rank_bound, 12u);
  EXPECT_TRUE(r.passes_2design_trace);
  EXPECT_TRUE(r.passes_2design_multiplicative);
  EXPECT_TRUE(r.passes_1design);
  EXPECT_NEAR(r.diamond_upper_bound, 4 * r.two_design_trace_dist, 1e-15);
}

TEST(CertifyDesign, PauliQubitFailsWithFrozenDistance) {
  // Distance 1 at d=2 and 14/9 at d=3 come from an independent dense evaluation.
  const auto r = certify_design(pauli_ensemble(2, 1), 1e-9);
  EXPECT_LE(r.one_design_dist, 1e-12);
  EXPECT_NEAR(r.two_design_trace_dist, 1.0, 1e-12);
  EXPECT_EQ(r.omega_rank, 4u);
  EXPECT_FALSE(r.passes_2design_trace);
  EXPECT_NEAR(certify_design(pauli_ensemble(3, 1), 1e-9).two_design_trace_dist, 14.0 / 9.0, 1e-12);
}

TEST(CertifyDesign, SingletonFailsEncryption) {
  const auto r = certify_design(singleton(2), 1e-9);
  EXPECT_NEAR(r.one_design_dist, trace_norm(max_entangled(2) - identity(4) / 4.0), 1e-14);
  EXPECT_NEAR(r.one_design_dist, 1.5, 1e-14);
  EXPECT_FALSE(r.passes_1design);
  EXPECT_NEAR(r.entropy_bits, 0.0, 0.0);
}

TEST(FramePotential, KnownValues) {
  EXPECT_NEAR(frame_potential(singleton(2)), 16.0, 1e-12);
  EXPECT_NEAR(frame_potential(pauli_ensemble(2, 1)), 4.0, 1e-12);
  EXPECT_NEAR(frame_potential(pauli_ensemble(3, 1)), 9.0, 1e-12);
  EXPECT_NEAR(frame_potential(clifford_prime(2)), 2.0, 1e-9);
}

TEST(FramePotential, NeverBelowTwo) {
  for (const auto& e : shipped_ensembles()) EXPECT_GE(frame_potential(e), 2.0 - 1e-9);
}

TEST(EntropyBound, QubitValueAndDomain) {
  const double hand = -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75)) + 1.5 * std::log2(3.0);
  EXPECT_NEAR(entropy_bound(2, 0.0), hand, 1e-12);
  EXPECT_NEAR(entropy_bound(2, 0.0), 3.1887, 1e-4);
  EXPECT_LE(entropy_bound(2, 0.0), std::log2(10.0));
  EXPECT_NO_THROW(entropy_bound(2, 1.0 / std::numbers::e));
  EXPECT_THROW(entropy_bound(2, 0.4), DomainError);
  EXPECT_THROW(entropy_bound(2, -0.1), DomainError);
  EXPECT_LT(entropy_bound(3, 0.1), entropy_bound(3, 0.0));
}

TEST(EnsembleEntropy, Values) {
  EXPECT_NEAR(ensemble_entropy(pauli_ensemble(2, 1)), 2.0, 1e-15);
  EXPECT_NEAR(ensemble_entropy(clifford_prime(2)), std::log2(24.0), 1e-12);
  EXPECT_NEAR(ensemble_entropy(singleton(3)), 0.0, 0.0);
  const UnitaryEnsemble skewed(2, {1.0, 0.0}, {identity(2), shift_op(2)});
  EXPECT_NEAR(ensemble_entropy(skewed), 0.0, 0.0);
}

TEST(MultiplicativeTheta, NotApplicableWhenOmegaLeavesSupport) {
  // Φ⊗(1−Φ)/(d²−1) is a state outside the ideal support.
  const ComplexMatrix phi = max_entangled(2);
  const ComplexMatrix off = kron(phi, identity(4) - phi) / 3.0;
  double leak = 0.0;
  EXPECT_FALSE(multiplicative_theta(off, 2, kSupportLeakageTol, &leak).has_value());
  EXPECT_NEAR(leak, 1.0, 1e-12);
  EXPECT_NEAR(*multiplicative_theta(ideal_choi(2), 2), 0.0, 1e-12);
}

// Cross-cutting invariants over every shipped ensemble.
TEST(DesignInvariants, TwoDesignImpliesOneDesignRankAndFramePotential) {
  for (const auto& e : shipped_ensembles()) {
    const auto r = certify_design(e, 1e-9);
    const bool exact = r.two_design_trace_dist <= 1e-9;
    EXPECT_LE(r.omega_rank, std::min<std::size_t>(static_cast<std::size_t>(std::pow(e.dim(), 4)), e.size()));
    if (exact) {
      EXPECT_LE(r.one_design_dist, 1e-8);
      EXPECT_GE(e.size(), r.omega_rank);
      EXPECT_GE(r.omega_rank, r.rank_bound);
    }
    EXPECT_EQ(exact, std::abs(r.frame_potential - 2.0) <= 1e-8) << e.meta().source;
    if (r.two_design_trace_dist <= 1.0 / std::numbers::e) {
      ASSERT_TRUE(r.entropy_bound_bits.has_value());
      EXPECT_GE(r.entropy_bits, *r.entropy_bound_bits);
    }
  }
}

TEST(DesignInvariants, VonNeumannEntropyChain) {
  // H(p) ≥ S(Ω) ≥ S(Ω_ideal) for exact designs (Ω = Ω_ideal).
  for (std::size_t p : {2, 3}) {
    const auto e = clifford_prime(p);
    const auto ev = herm_eig(ensemble_choi(e)).values;
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) > 1e-14) s -= ev(i) * std::log2(ev(i));
    EXPECT_NEAR(s, entropy_bound(p, 0.0), 1e-9);
    EXPECT_GE(ensemble_entropy(e), s);
  }
}
