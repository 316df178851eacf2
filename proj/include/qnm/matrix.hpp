#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qnm {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Carrier for states, unitaries and Choi operators.
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

/// Thrown when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates a numerical precondition (Hermiticity, PSD, unitarity, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a scalar parameter lies outside the admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultHermTol = 1e-10;

/// Tensor-factor structure of a square matrix: factor dimensions in kron order.
class DimsSpec {
 public:
  DimsSpec() = default;
  DimsSpec(std::initializer_list<std::size_t> dims);
  explicit DimsSpec(std::vector<std::size_t> dims);

  [[nodiscard]] std::span<const std::size_t> factors() const { return dims_; }
  [[nodiscard]] std::size_t size() const { return dims_.size(); }
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  [[nodiscard]] std::size_t total() const;

 private:
  std::vector<std::size_t> dims_;
};

struct HermEig {
  RealVector values;           // ascending
  ComplexMatrix vectors;       // columns are eigenvectors
};

ComplexMatrix identity(std::size_t n);
ComplexMatrix zeros(std::size_t rows, std::size_t cols);

/// |i><j| in dimension n.
ComplexMatrix ket_bra(std::size_t n, std::size_t i, std::size_t j);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over every factor not listed in `keep`. Kept factors retain their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimsSpec& dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimsSpec& dims,
                            std::initializer_list<std::size_t> keep);

/// Transpose of the listed factors in the computational basis.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimsSpec& dims,
                                std::span<const std::size_t> factors);

bool is_square(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultHermTol);
double max_abs(const ComplexMatrix& m);

/// Sum of singular values. Hermitian inputs go through the eigendecomposition.
double trace_norm(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
HermEig herm_eig(const ComplexMatrix& m, double tol = kDefaultHermTol);

/// Number of eigenvalues above `tol`. Rejects eigenvalues below -tol.
std::size_t num_rank(const ComplexMatrix& m, double tol = kDefaultHermTol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m, double tol = kDefaultHermTol);

bool is_psd(const ComplexMatrix& m, double tol = kDefaultHermTol);

/// Unitarity defect ‖U†U − 1‖_max.
double unitarity_defect(const ComplexMatrix& u);

/// Density-matrix check: Hermitian, PSD and unit trace, all within tol.
bool is_state(const ComplexMatrix& rho, double tol = kDefaultHermTol);

/// Row-major flattening into a column vector.
ComplexVector vec(const ComplexMatrix& m);

}  // namespace qnm
