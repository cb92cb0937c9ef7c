#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tlforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

using Index = Eigen::Index;

/// Default bound on the dimension of any tensor-product space we are willing
/// to materialize. Override per call or via the CLI --cap flag / TLFORGE_CAP.
inline constexpr Index kDefaultDimCap = 4096;

/// Numerical comparison thresholds. abs_eps governs entrywise/Frobenius
/// residual checks, rank_eps is relative to the largest singular value.
struct Tolerance {
  double abs_eps = 1e-9;
  double rank_eps = 1e-9;
};

/// Thrown when an operation would materialize a space larger than the cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(Index requested, Index cap)
      : std::runtime_error("dimension " + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  Index requested() const { return requested_; }
  Index cap() const { return cap_; }

 private:
  Index requested_;
  Index cap_;
};

/// n^k with an overflow/cap guard. Throws CapExceeded if the result is > cap.
Index pow_dim(Index n, Index k, Index cap = kDefaultDimCap);

/// Matrix unit E^{(n)}_{ab}: single 1 in row a, column b. Indices one-based.
Matrix matrix_unit(Index n, Index a, Index b);

Matrix identity(Index n);

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
inline Matrix dagger(const Matrix& a) { return a.adjoint(); }

inline Complex trace(const Matrix& a) { return a.trace(); }

double frobenius_dist(const Matrix& a, const Matrix& b);

// Checked arithmetic. Internal code uses Eigen operators directly where
// shapes are guaranteed by construction; these wrappers validate shapes of
// externally supplied matrices.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(Complex c, const Matrix& a);

bool all_finite(const Matrix& a);

/// Number of singular values exceeding rank_eps * sigma_max (0 for a zero
/// or empty matrix).
Index rank(const Matrix& a, const Tolerance& tol = {});

/// ||A A* - I||_F <= abs_eps * dim. Throws on non-square input.
bool is_unitary(const Matrix& a, const Tolerance& tol = {});

/// ||A - A*||_F <= abs_eps * dim. Throws on non-square input.
bool is_hermitian(const Matrix& a, const Tolerance& tol = {});

/// Hermitian with min eigenvalue >= -abs_eps * ||A||_F.
bool is_psd(const Matrix& a, const Tolerance& tol = {});

}  // namespace tlforge
