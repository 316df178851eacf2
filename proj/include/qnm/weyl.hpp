#pragma once

#include <cstddef>
#include <vector>

#include "qnm/ensemble.hpp"
#include "qnm/matrix.hpp"

namespace qnm {

/// Label (a, b) of the Weyl operator X^a Z^b in dimension d.
struct WeylIndex {
  std::size_t d;
  std::size_t a;  // shift exponent
  std::size_t b;  // phase exponent

  WeylIndex(std::size_t d, std::size_t a, std::size_t b);
};

/// ω^k with ω = exp(2πi/d).
Complex root_of_unity(std::size_t d, long long k);

ComplexMatrix shift_op(std::size_t d);  // X |j> = |j+1 mod d>
ComplexMatrix clock_op(std::size_t d);  // Z |k> = ω^k |k>

/// W(a,b) = X^a Z^b, no extra phase.
ComplexMatrix weyl(const WeylIndex& idx);

/// ζ with W(a,b) W(a',b') = ζ W(a',b') W(a,b).
Complex weyl_commutation_phase(std::size_t d, std::size_t a, std::size_t b, std::size_t a2,
                               std::size_t b2);

bool is_prime(std::size_t n);

/// Tensor product of single-qudit Weyl operators for key `key` of pauli_ensemble(p, n).
/// Qudit q takes base-p² digit q of the key (little-endian), split as a + p·b.
ComplexMatrix pauli_key_unitary(std::size_t p, std::size_t n, std::size_t key);

/// Uniform ensemble over all p^{2n} Weyl tensor products (the quantum one-time pad).
UnitaryEnsemble pauli_ensemble(std::size_t p, std::size_t n);

}  // namespace qnm
