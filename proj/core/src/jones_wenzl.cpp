#include "tlforge/jones_wenzl.hpp"

#include <cmath>
#include <limits>

namespace tlforge {

double chebyshev_u(Index m, double t) {
  if (m < 0) throw std::invalid_argument("chebyshev_u: m must be >= 0");
  double prev = 1.0;          // U_0
  if (m == 0) return prev;
  double cur = 2.0 * t;       // U_1
  for (Index i = 1; i < m; ++i) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double JwCoefficients::at(Index k) const {
  const double v = values.at(static_cast<std::size_t>(k - 1));
  if (std::isinf(v)) throw std::domain_error("coefficient " + std::to_string(k) + " is infinite");
  return v;
}

double JwCoefficients::inv(Index k) const {
  const double v = values.at(static_cast<std::size_t>(k - 1));
  return std::isinf(v) ? 0.0 : 1.0 / v;
}

JwCoefficients jw_coefficients(double Q, Index N) {
  if (!(Q > 0.0)) throw std::invalid_argument("jw_coefficients: Q must be positive");
  if (N < 1) throw std::invalid_argument("jw_coefficients: N must be >= 1");
  JwCoefficients seq;
  seq.Q = Q;
  seq.values.reserve(static_cast<std::size_t>(N));
  const double pole_window = 1e-12 * (1.0 + Q);
  double cur = 1.0 / Q;
  for (Index k = 1; k <= N; ++k) {
    // Cross-check against the closed form U_{k-1}(Q/2)/U_k(Q/2): a pole of
    // c_{k+1} is a zero of U_k. Floating point cannot land on the pole
    // exactly for irrational Q, hence the window on both routes.
    const double uk = chebyshev_u(k, Q / 2.0);
    const double ukm1 = chebyshev_u(k - 1, Q / 2.0);
    const bool pole_next = std::isfinite(cur)
                               ? (std::abs(Q - cur) <= pole_window ||
                                  std::abs(uk) <= 1e-12 * std::max(1.0, std::abs(ukm1)))
                               : false;
    seq.values.push_back(cur);
    if (std::isinf(cur) && !seq.first_infinite) seq.first_infinite = k;
    if (std::isinf(cur)) {
      cur = 0.0;  // Moebius continuation 1/(Q - inf)
    } else if (pole_next) {
      cur = std::numeric_limits<double>::infinity();
    } else {
      cur = 1.0 / (Q - cur);
    }
  }
  return seq;
}

const Matrix& JwLadder::projector(Index N) const {
  if (N < 1 || N > depth())
    throw std::out_of_range("JwLadder: projector index " + std::to_string(N) +
                            " outside built range 1.." + std::to_string(depth()));
  return projectors[static_cast<std::size_t>(N - 1)];
}

JwLadder jw_ladder(const TLSolution& sol, Index N, Index cap) {
  if (N < 1) throw std::invalid_argument("jw_ladder: N must be >= 1");
  pow_dim(sol.n, N, cap);
  JwLadder ladder;
  ladder.base = sol;
  ladder.requested_depth = N;
  ladder.coeffs = jw_coefficients(sol.Q, N);
  ladder.projectors.push_back(identity(sol.n));  // P_1
  const Index n = sol.n;
  for (Index k = 1; k < N; ++k) {
    if (ladder.coeffs.is_infinite(k)) break;  // P_{k+1} needs coeff_k finite
    const double coeff_k = ladder.coeffs.at(k);
    const Matrix& Pk = ladder.projectors.back();
    const Matrix Pk1 = kron(Pk, identity(n));
    const Matrix Sk = embed(sol.T, n, k, k + 1, cap);
    ladder.projectors.push_back(Pk1 - coeff_k * (Pk1 * Sk * Pk1));
  }
  return ladder;
}

// P at level m embedded into (C^n)^{xM} starting after `shift` identity
// factors: I^{x shift} (x) P_m (x) I^{x(M - shift - m)}.
static Matrix embed_projector(const JwLadder& ladder, Index m, Index shift,
                              Index M, Index cap) {
  const Index n = ladder.base.n;
  pow_dim(n, M, cap);
  Matrix out = ladder.projector(m);
  const Index left = pow_dim(n, shift, cap);
  const Index right = pow_dim(n, M - shift - m, cap);
  if (left > 1) out = kron(identity(left), out);
  if (right > 1) out = kron(out, identity(right));
  return out;
}

static RelationReport residual_check(const std::string& name, const Matrix& lhs,
                                     const Matrix& rhs, double abs_eps) {
  const double resid = (lhs - rhs).norm();
  const double scale = std::max({1.0, lhs.norm(), rhs.norm()});
  const double thr = abs_eps * scale;
  return {name, resid, thr, resid <= thr};
}

Report verify_cube_relation(const JwLadder& ladder, Index N,
                            const Tolerance& tol, Index cap) {
  if (N < 2) throw std::invalid_argument("verify_cube_relation: N must be >= 2");
  if (ladder.depth() < N)
    throw std::domain_error("verify_cube_relation: coefficient pole before level " +
                            std::to_string(N));
  const Index n = ladder.base.n;
  Report rep;
  if (N == 2 && ladder.depth() >= 3) {
    // The sharper square form; needs P_3, i.e. c_2 finite.
    const Index d3 = pow_dim(n, 3, cap);
    const Matrix P2 = embed_projector(ladder, 2, 0, 3, cap);
    const Matrix P2p = embed_projector(ladder, 2, 1, 3, cap);
    const Matrix D = P2 - P2p;
    const double c = ladder.coeffs.at(1) / ladder.coeffs.at(2);
    const Matrix rhs = c * (identity(d3) - ladder.projector(3));
    rep.checks.push_back(residual_check("square_relation", D * D, rhs, tol.abs_eps));
    return rep;
  }
  pow_dim(n, N + 1, cap);
  const Matrix PN = embed_projector(ladder, N, 0, N + 1, cap);
  const Matrix PNp = embed_projector(ladder, N, 1, N + 1, cap);
  const Matrix D = PN - PNp;
  // c_N may itself be a pole; the ratio c_{N-1}/c_N is then 0.
  const double c = ladder.coeffs.at(N - 1) * ladder.coeffs.inv(N);
  rep.checks.push_back(residual_check("cube_relation", D * D * D, c * D, tol.abs_eps));
  return rep;
}

Report verify_contraction_identities(const JwLadder& ladder, Index N,
                                     const Tolerance& tol, Index cap) {
  if (N < 2) throw std::invalid_argument("verify_contraction_identities: N must be >= 2");
  if (ladder.depth() < N)
    throw std::domain_error("verify_contraction_identities: coefficient pole before level " +
                            std::to_string(N));
  const Index n = ladder.base.n;
  const Index M = N + 2;
  pow_dim(n, M, cap);
  const Matrix& T = ladder.base.T;
  const Matrix S1 = embed(T, n, 1, M, cap);
  const Matrix SN = embed(T, n, N, M, cap);
  const Matrix SN1 = embed(T, n, N + 1, M, cap);
  const Matrix PN = embed_projector(ladder, N, 0, M, cap);
  const Matrix PNm1 = embed_projector(ladder, N - 1, 0, M, cap);
  const Matrix PpN = embed_projector(ladder, N, 1, M, cap);
  const Matrix PpNm1 = embed_projector(ladder, N - 1, 1, M, cap);
  const Matrix PppN = embed_projector(ladder, N, 2, M, cap);
  const Matrix PppNm1 = embed_projector(ladder, N - 1, 2, M, cap);

  // The coefficients telescope into ratios of Chebyshev values,
  //   1/c_N = U_N / U_{N-1},   1/(c_N c_{N+1}) = U_{N+1} / U_{N-1},
  // which stay finite at poles of the sequence (U_{N-1} != 0 once the ladder reaches
  // level N) instead of producing 0 * inf.
  const double t = ladder.base.Q / 2.0;
  const double u_nm1 = chebyshev_u(N - 1, t);
  const double inv_rN = chebyshev_u(N, t) / u_nm1;
  const double inv_rN_rN1 = chebyshev_u(N + 1, t) / u_nm1;

  Report rep;
  rep.checks.push_back(residual_check("contract:right", SN * PN * SN, inv_rN * (SN * PNm1),
                                      tol.abs_eps));
  rep.checks.push_back(residual_check("contract:right_shifted", SN1 * PpN * SN1,
                                      inv_rN * (SN1 * PpNm1), tol.abs_eps));
  rep.checks.push_back(residual_check("contract:left_shifted", S1 * PpN * S1,
                                      inv_rN * (S1 * PppNm1), tol.abs_eps));
  rep.checks.push_back(residual_check(
      "contract:left_right_left", S1 * PpN * SN1 * PpN * S1,
      -inv_rN_rN1 * (S1 * PppN) + (inv_rN * inv_rN) * (S1 * PppNm1), tol.abs_eps));
  rep.checks.push_back(residual_check(
      "contract:right_left_right", SN1 * PpN * S1 * PpN * SN1,
      -inv_rN_rN1 * (SN1 * PN) + (inv_rN * inv_rN) * (SN1 * PpNm1), tol.abs_eps));
  return rep;
}

double trace_formula(Index N, Index n, Index r) {
  if (N < 1 || n < 1 || r < 1)
    throw std::invalid_argument("trace_formula: N, n, r must be >= 1");
  const double sr = std::sqrt(static_cast<double>(r));
  return std::pow(sr, static_cast<double>(N)) *
         chebyshev_u(N, static_cast<double>(n) / (2.0 * sr));
}

Matrix reversal_permutation(Index n, Index N, Index cap) {
  const Index dim = pow_dim(n, N, cap);
  Index top = 1;
  for (Index f = 1; f < N; ++f) top *= n;
  Matrix P = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    // Reverse the base-n digit string of i: the least significant digit
    // (rightmost tensor factor) becomes the most significant one.
    Index j = 0, y = i, place = top;
    for (Index f = 0; f < N; ++f) {
      j += (y % n) * place;
      y /= n;
      place /= n;
    }
    P(j, i) = 1.0;
  }
  return P;
}

Matrix flipped_projector(const JwLadder& ladder, Index N, Index cap) {
  if (N < 1 || N > ladder.depth())
    throw std::out_of_range("flipped_projector: level outside built range");
  const Index n = ladder.base.n;
  const Index dim = pow_dim(n, N, cap);
  Matrix P = identity(dim);
  for (Index m = 1; m < N; ++m) {
    const double coeff_m = ladder.coeffs.at(m);
    const Matrix G = embed(ladder.base.T, n, N - m, N, cap);
    P = P - coeff_m * (P * G * P);
  }
  return P;
}

}  // namespace tlforge
