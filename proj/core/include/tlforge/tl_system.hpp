#pragma once

#include <string>

#include "tlforge/matrix.hpp"
#include "tlforge/report.hpp"

namespace tlforge {

/// A verified solution T of the defining system: T Hermitian, T^2 = Q T,
/// and the two adjacent-triple relations on (C^n)^{x3}. Construct through
/// verify_all; r is the numerical rank of T.
struct TLSolution {
  Matrix T;  // n^2 x n^2
  Index n = 0;
  double Q = 0.0;
  Index r = 0;
  std::string label;
};

/// Spectral data attached to a solution: exp(gamma) + exp(-gamma) = Q,
/// lambda/mu are the additive spectral parameters of the R-matrix checks.
struct SpectralParams {
  Complex gamma;
  double lambda = 0.0;
  double mu = 0.0;
};

SpectralParams spectral_params(const TLSolution& sol, double lambda = 0.0,
                               double mu = 0.0);

/// I_n^{(x(k-1))} (x) T (x) I_n^{(x(N-k-1))} acting on (C^n)^{xN}.
/// T must be n^2 x n^2 and 1 <= k <= N-1.
Matrix embed(const Matrix& T, Index n, Index k, Index N,
             Index cap = kDefaultDimCap);

/// Hermiticity ||T - T*||_F and scaled idempotency ||T^2 - Q T||_F; each
/// passes at abs_eps * dim(T).
Report verify_hermitian_idempotent(const Matrix& T, double Q, const Tolerance& tol = {});

/// The two adjacent-triple relations in M_{n^3}; each passes at
/// abs_eps * n^3.
Report verify_triple_relations(const Matrix& T, Index n, const Tolerance& tol = {},
                 Index cap = kDefaultDimCap);

/// Principal gamma with exp(gamma)+exp(-gamma) = Q: real acosh(Q/2) for
/// Q >= 2, i*acos(Q/2) (positive imaginary part) for 0 < Q < 2.
Complex gamma_from_Q(double Q);

/// R(lambda) = sinh(lambda + gamma) I - sinh(lambda) T.
Matrix r_matrix(const TLSolution& sol, double lambda);

/// Constant R = exp(gamma) I - T.
Matrix constant_r_matrix(const TLSolution& sol);

/// Residual of R12(l) R23(l+m) R12(m) = R23(m) R12(l+m) R23(l) in M_{n^3},
/// normalized by the product of the three factor norms.
Report verify_yang_baxter(const TLSolution& sol, double lambda, double mu,
                          const Tolerance& tol = {},
                          Index cap = kDefaultDimCap);

/// Braid relation R12 R23 R12 = R23 R12 R23 for the constant R.
Report verify_braid(const TLSolution& sol, const Tolerance& tol = {},
                    Index cap = kDefaultDimCap);

/// Runs verify_hermitian_idempotent, verify_triple_relations and the rank computation; returns the
/// assembled TLSolution or throws VerificationError naming the failing
/// relation.
TLSolution verify_all(const Matrix& T, Index n, double Q,
                      const Tolerance& tol = {}, Index cap = kDefaultDimCap,
                      std::string label = {});

}  // namespace tlforge
