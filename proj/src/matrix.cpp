#include "qnm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnm {

DimsSpec::DimsSpec(std::initializer_list<std::size_t> dims) : DimsSpec(std::vector<std::size_t>(dims)) {}

DimsSpec::DimsSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionError("DimsSpec: no factors");
  for (auto d : dims_)
    if (d == 0) throw DimensionError("DimsSpec: factor dimension must be positive");
}

std::size_t DimsSpec::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

ComplexMatrix identity(std::size_t n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix::Zero(rows, cols); }

ComplexMatrix ket_bra(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m = zeros(n, n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto br = b.rows(), bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

namespace {

void check_dims(const ComplexMatrix& m, const DimsSpec& dims) {
  if (!is_square(m)) throw DimensionError("expected a square matrix");
  if (dims.total() != static_cast<std::size_t>(m.rows()))
    throw DimensionError("factor dimensions do not multiply to the matrix dimension");
}

// Digits of a flat index in the mixed radix given by dims (factor 0 most significant).
std::vector<std::size_t> digits(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimsSpec& dims,
                            std::span<const std::size_t> keep) {
  check_dims(m, dims);
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw DimensionError("partial_trace: factor index out of range");
    kept[k] = true;
  }

  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> kept_index(n), traced_index(n);
  std::size_t kept_dim = 1;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (kept[k]) kept_dim *= dims[k];
  for (std::size_t i = 0; i < n; ++i) {
    const auto dg = digits(i, dims.factors());
    std::size_t ki = 0, ti = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (kept[k])
        ki = ki * dims[k] + dg[k];
      else
        ti = ti * dims[k] + dg[k];
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out = zeros(kept_dim, kept_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += m(i, j);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimsSpec& dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(m, dims, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimsSpec& dims,
                                std::span<const std::size_t> factors) {
  check_dims(m, dims);
  std::vector<bool> flip(dims.size(), false);
  for (auto k : factors) {
    if (k >= dims.size()) throw DimensionError("partial_transpose: factor index out of range");
    flip[k] = true;
  }
  const auto n = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = digits(i, dims.factors());
    for (std::size_t j = 0; j < n; ++j) {
      const auto cj = digits(j, dims.factors());
      std::size_t r = 0, c = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        const auto a = flip[k] ? cj[k] : ri[k];
        const auto b = flip[k] ? ri[k] : cj[k];
        r = r * dims[k] + a;
        c = c * dims[k] + b;
      }
      out(r, c) = m(i, j);
    }
  }
  return out;
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

double hermiticity_defect(const ComplexMatrix& m) {
  if (!is_square(m)) throw DimensionError("hermiticity check needs a square matrix");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double trace_norm(const ComplexMatrix& m) {
  if (!is_square(m)) throw DimensionError("trace_norm: matrix is not square");
  if (is_hermitian(m, kDefaultHermTol * std::max(1.0, max_abs(m)))) {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

HermEig herm_eig(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) throw DimensionError("herm_eig: matrix is not square");
  if (!is_hermitian(m, tol)) throw ValidationError("herm_eig: matrix is not Hermitian");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw ValidationError("herm_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

RealVector eigenvalues_only(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) throw DimensionError("expected a square matrix");
  if (!is_hermitian(m, tol)) throw ValidationError("matrix is not Hermitian");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

std::size_t num_rank(const ComplexMatrix& m, double tol) {
  const auto ev = eigenvalues_only(m, tol);
  if (ev.size() > 0 && ev(0) < -tol)
    throw ValidationError("num_rank: matrix has a negative eigenvalue below -tol");
  return static_cast<std::size_t>((ev.array() > tol).count());
}

double min_eigenvalue(const ComplexMatrix& m, double tol) { return eigenvalues_only(m, tol)(0); }

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_square(m) || !is_hermitian(m, tol)) return false;
  return min_eigenvalue(m, tol) >= -tol;
}

double unitarity_defect(const ComplexMatrix& u) {
  if (!is_square(u)) throw DimensionError("unitarity check needs a square matrix");
  return (u.adjoint() * u - identity(u.rows())).cwiseAbs().maxCoeff();
}

bool is_state(const ComplexMatrix& rho, double tol) {
  return is_psd(rho, tol) && std::abs(rho.trace() - 1.0) <= tol;
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

}  // namespace qnm
