#include "tlforge/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace tlforge {

Index pow_dim(Index n, Index k, Index cap) {
  if (n < 1 || k < 0) throw std::invalid_argument("pow_dim: need n >= 1, k >= 0");
  Index d = 1;
  for (Index i = 0; i < k; ++i) {
    if (d > cap / n) throw CapExceeded(d * n, cap);
    d *= n;
  }
  if (d > cap) throw CapExceeded(d, cap);
  return d;
}

Matrix matrix_unit(Index n, Index a, Index b) {
  if (n < 1) throw std::invalid_argument("matrix_unit: n must be positive");
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("matrix_unit: index out of range");
  Matrix m = Matrix::Zero(n, n);
  m(a - 1, b - 1) = 1.0;
  return m;
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double frobenius_dist(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("frobenius_dist: shape mismatch");
  return (a - b).norm();
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  return a * b;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  return a + b;
}

Matrix scale(Complex c, const Matrix& a) { return c * a; }

bool all_finite(const Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) {
      const Complex& z = a(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

Index rank(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(a);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("rank: singular value decomposition did not converge");
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = tol.rank_eps * sv(0);
  if (sv(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

static void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

bool is_unitary(const Matrix& a, const Tolerance& tol) {
  require_square(a, "is_unitary");
  const Index d = a.rows();
  return (a * a.adjoint() - Matrix::Identity(d, d)).norm() <=
         tol.abs_eps * static_cast<double>(d);
}

bool is_hermitian(const Matrix& a, const Tolerance& tol) {
  require_square(a, "is_hermitian");
  return (a - a.adjoint()).norm() <= tol.abs_eps * static_cast<double>(a.rows());
}

bool is_psd(const Matrix& a, const Tolerance& tol) {
  require_square(a, "is_psd");
  if (!is_hermitian(a, tol)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("is_psd: eigenvalue computation failed");
  return es.eigenvalues().minCoeff() >= -tol.abs_eps * a.norm();
}

}  // namespace tlforge
