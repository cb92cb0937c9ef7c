#include "tlforge/tl_system.hpp"

#include <cmath>

namespace tlforge {

Matrix embed(const Matrix& T, Index n, Index k, Index N, Index cap) {
  if (n < 1) throw std::invalid_argument("embed: n must be positive");
  if (T.rows() != n * n || T.cols() != n * n)
    throw std::invalid_argument("embed: T must be n^2 x n^2");
  if (N < 2 || k < 1 || k > N - 1)
    throw std::invalid_argument("embed: need 1 <= k <= N-1, N >= 2");
  pow_dim(n, N, cap);
  const Index left = pow_dim(n, k - 1, cap);
  const Index right = pow_dim(n, N - k - 1, cap);
  Matrix out = T;
  if (left > 1) out = kron(identity(left), out);
  if (right > 1) out = kron(out, identity(right));
  return out;
}

static Index site_dim_of(const Matrix& T, const char* who) {
  if (T.rows() != T.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  const Index dim = T.rows();
  const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (n * n != dim)
    throw std::invalid_argument(std::string(who) + ": size is not a perfect square");
  return n;
}

Report verify_hermitian_idempotent(const Matrix& T, double Q, const Tolerance& tol) {
  site_dim_of(T, "verify_hermitian_idempotent");
  const double dim = static_cast<double>(T.rows());
  const double thr = tol.abs_eps * dim;
  Report rep;
  const double herm = (T - T.adjoint()).norm();
  rep.checks.push_back({"hermitian", herm, thr, herm <= thr});
  const double idem = (T * T - Q * T).norm();
  rep.checks.push_back({"idempotent", idem, thr, idem <= thr});
  return rep;
}

Report verify_triple_relations(const Matrix& T, Index n, const Tolerance& tol, Index cap) {
  if (T.rows() != n * n || T.cols() != n * n)
    throw std::invalid_argument("verify_triple_relations: T must be n^2 x n^2");
  const Index d3 = pow_dim(n, 3, cap);
  const Matrix T12 = kron(T, identity(n));
  const Matrix T23 = kron(identity(n), T);
  const double thr = tol.abs_eps * static_cast<double>(d3);
  Report rep;
  const double r1 = (T12 * T23 * T12 - T12).norm();
  rep.checks.push_back({"triple:121", r1, thr, r1 <= thr});
  const double r2 = (T23 * T12 * T23 - T23).norm();
  rep.checks.push_back({"triple:232", r2, thr, r2 <= thr});
  return rep;
}

Complex gamma_from_Q(double Q) {
  if (!(Q > 0.0)) throw std::invalid_argument("gamma_from_Q: Q must be positive");
  if (Q >= 2.0) return Complex(std::acosh(Q / 2.0), 0.0);
  // Q < 2: purely imaginary branch with positive imaginary part.
  return Complex(0.0, std::acos(Q / 2.0));
}

SpectralParams spectral_params(const TLSolution& sol, double lambda, double mu) {
  return {gamma_from_Q(sol.Q), lambda, mu};
}

Matrix r_matrix(const TLSolution& sol, double lambda) {
  const Complex g = spectral_params(sol, lambda).gamma;
  const Index d = sol.T.rows();
  return std::sinh(Complex(lambda) + g) * identity(d) - Complex(std::sinh(lambda)) * sol.T;
}

Matrix constant_r_matrix(const TLSolution& sol) {
  const Complex g = gamma_from_Q(sol.Q);
  return std::exp(g) * identity(sol.T.rows()) - sol.T;
}

Report verify_yang_baxter(const TLSolution& sol, double lambda, double mu,
                          const Tolerance& tol, Index cap) {
  const Index n = sol.n;
  pow_dim(n, 3, cap);
  const Matrix I = identity(n);
  const Matrix Rl = r_matrix(sol, lambda);
  const Matrix Rlm = r_matrix(sol, lambda + mu);
  const Matrix Rm = r_matrix(sol, mu);
  const Matrix A = kron(Rl, I), B = kron(I, Rlm), C = kron(Rm, I);
  const Matrix D = kron(I, Rm), E = kron(Rlm, I), F = kron(I, Rl);
  const double resid = (A * B * C - D * E * F).norm();
  const double scale = A.norm() * B.norm() * C.norm();
  const double thr = tol.abs_eps * scale;
  Report rep;
  rep.checks.push_back({"yang_baxter", resid, thr, resid <= thr});
  return rep;
}

Report verify_braid(const TLSolution& sol, const Tolerance& tol, Index cap) {
  const Index n = sol.n;
  pow_dim(n, 3, cap);
  const Matrix I = identity(n);
  const Matrix R = constant_r_matrix(sol);
  const Matrix R12 = kron(R, I);
  const Matrix R23 = kron(I, R);
  const double resid = (R12 * R23 * R12 - R23 * R12 * R23).norm();
  const double scale = R12.norm() * R23.norm() * R12.norm();
  const double thr = tol.abs_eps * scale;
  Report rep;
  rep.checks.push_back({"braid", resid, thr, resid <= thr});
  return rep;
}

TLSolution verify_all(const Matrix& T, Index n, double Q, const Tolerance& tol,
                      Index cap, std::string label) {
  if (n < 1) throw std::invalid_argument("verify_all: n must be positive");
  if (!(Q > 0.0)) throw std::invalid_argument("verify_all: Q must be positive");
  if (T.rows() != n * n || T.cols() != n * n)
    throw std::invalid_argument("verify_all: T must be n^2 x n^2");
  if (!all_finite(T)) throw VerificationError("finite_entries", std::numeric_limits<double>::quiet_NaN());

  Report rep = verify_hermitian_idempotent(T, Q, tol);
  if (const auto* f = rep.failing()) throw VerificationError(f->relation, f->residual);
  rep = verify_triple_relations(T, n, tol, cap);
  if (const auto* f = rep.failing()) throw VerificationError(f->relation, f->residual);

  TLSolution sol;
  sol.T = T;
  sol.n = n;
  sol.Q = Q;
  sol.r = rank(T, tol);
  sol.label = std::move(label);
  return sol;
}

}  // namespace tlforge
