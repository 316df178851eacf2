#include <gtest/gtest.h>

#include <numbers>

#include "qnm/design.hpp"
#include "qnm/weyl.hpp"

using namespace qnm;

TEST(Weyl, QubitGenerators) {
  ComplexMatrix x(2, 2), z(2, 2), xz(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  xz << 0, -1, 1, 0;
  EXPECT_LE(max_abs(weyl({2, 1, 0}) - x), 1e-15);
  EXPECT_LE(max_abs(weyl({2, 0, 1}) - z), 1e-15);
  EXPECT_LE(max_abs(weyl({2, 1, 1}) - xz), 1e-15);
  EXPECT_LE(max_abs(weyl({2, 1, 1}) - shift_op(2) * clock_op(2)), 1e-15);
}

TEST(Weyl, RejectsOutOfRangeIndex) {
  EXPECT_THROW(WeylIndex(3, 3, 0), ValidationError);
  EXPECT_THROW(WeylIndex(3, 0, 5), ValidationError);
  EXPECT_THROW(WeylIndex(1, 0, 0), ValidationError);
}

TEST(Weyl, EveryOperatorIsUnitary) {
  for (std::size_t d : {2, 3, 4, 5, 7})
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) EXPECT_LE(unitarity_defect(weyl({d, a, b})), 1e-12);
}

TEST(WeylCommutation, KnownPhases) {
  EXPECT_NEAR(std::abs(weyl_commutation_phase(2, 1, 0, 0, 1) - Complex(-1, 0)), 0.0, 1e-15);
  // ZX = ω XZ at d = 3.
  const Complex omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_NEAR(std::abs(weyl_commutation_phase(3, 0, 1, 1, 0) - omega), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(weyl_commutation_phase(3, 1, 0, 0, 1) - std::conj(omega)), 0.0, 1e-15);
  for (std::size_t d : {2, 3, 5})
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        EXPECT_NEAR(std::abs(weyl_commutation_phase(d, a, b, a, b) - 1.0), 0.0, 1e-15);
}

TEST(WeylCommutation, MatchesMatrixProducts) {
  for (std::size_t d : {2, 3, 4, 5}) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t a2 = 0; a2 < d; ++a2)
          for (std::size_t b2 = 0; b2 < d; ++b2) {
            const auto w1 = weyl({d, a, b}), w2 = weyl({d, a2, b2});
            const Complex zeta = weyl_commutation_phase(d, a, b, a2, b2);
            EXPECT_LE(max_abs(w1 * w2 - zeta * (w2 * w1)), 1e-12);
          }
  }
}

TEST(Weyl, GroupLawUpToPredictedPhase) {
  // W(a,b) W(a',b') = ω^{a'b} W(a+a', b+b'); the phase squared over the commutator gives ζ.
  for (std::size_t d : {2, 3, 5}) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t a2 = 0; a2 < d; ++a2)
          for (std::size_t b2 = 0; b2 < d; ++b2) {
            const ComplexMatrix prod = weyl({d, a, b}) * weyl({d, a2, b2});
            const ComplexMatrix sum = weyl({d, (a + a2) % d, (b + b2) % d});
            const Complex phase = root_of_unity(d, static_cast<long long>(a2 * b));
            EXPECT_LE(max_abs(prod - phase * sum), 1e-12);
            const Complex other = root_of_unity(d, static_cast<long long>(a * b2));
            EXPECT_NEAR(std::abs(phase / other - weyl_commutation_phase(d, a, b, a2, b2)), 0.0, 1e-12);
          }
  }
}

TEST(PauliEnsemble, SizesAndWeights) {
  const auto q = pauli_ensemble(2, 1);
  ASSERT_EQ(q.size(), 4u);
  EXPECT_EQ(q.dim(), 2u);
  for (double w : q.weights()) EXPECT_DOUBLE_EQ(w, 0.25);
  EXPECT_LE(max_abs(q.unitary(0) - identity(2)), 0.0);
  EXPECT_LE(max_abs(q.unitary(1) - weyl({2, 1, 0})), 0.0);
  EXPECT_LE(max_abs(q.unitary(2) - weyl({2, 0, 1})), 0.0);
  EXPECT_LE(max_abs(q.unitary(3) - weyl({2, 1, 1})), 0.0);

  const auto t = pauli_ensemble(3, 1);
  EXPECT_EQ(t.size(), 9u);
  for (double w : t.weights()) EXPECT_DOUBLE_EQ(w, 1.0 / 9.0);

  const auto two = pauli_ensemble(2, 2);
  EXPECT_EQ(two.size(), 16u);
  EXPECT_EQ(two.dim(), 4u);
}

TEST(PauliEnsemble, KeyDigitsAreLittleEndian) {
  // key 1 → X on qudit 0 (the first tensor factor), identity on qudit 1.
  EXPECT_LE(max_abs(pauli_key_unitary(2, 2, 1) - kron(weyl({2, 1, 0}), identity(2))), 0.0);
  EXPECT_LE(max_abs(pauli_key_unitary(2, 2, 4) - kron(identity(2), weyl({2, 1, 0}))), 0.0);
}

TEST(PauliEnsemble, RejectsNonPrime) {
  EXPECT_THROW(pauli_ensemble(4, 1), ValidationError);
  EXPECT_THROW(pauli_ensemble(1, 1), ValidationError);
  EXPECT_THROW(pauli_ensemble(3, 0), ValidationError);
}

TEST(PauliEnsemble, IsOneDesignButNotTwoDesign) {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    const auto e = pauli_ensemble(p, n);
    const auto r = certify_design(e, 1e-9);
    const std::size_t d = e.dim();
    EXPECT_LE(r.one_design_dist, 1e-12) << "p=" << p << " n=" << n;
    EXPECT_GT(r.two_design_trace_dist, 0.1);
    EXPECT_EQ(r.omega_rank, d * d);
    EXPECT_LT(r.omega_rank, rank_lower_bound(d));
  }
}
