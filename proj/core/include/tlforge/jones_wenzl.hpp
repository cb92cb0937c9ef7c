#pragma once

#include <optional>
#include <vector>

#include "tlforge/tl_system.hpp"

namespace tlforge {

/// Chebyshev polynomial of the second kind via the recurrence
/// U_{m+1}(t) = 2t U_m(t) - U_{m-1}(t), U_0 = 1, U_1 = 2t.
double chebyshev_u(Index m, double t);

/// Coefficient sequence c_1..c_N of the projector recursion, c_1 = 1/Q and
/// c_{k+1} = 1/(Q - c_k). Entries at a pole are stored as +infinity;
/// the entry after a pole continues with the Moebius limit 0 = 1/(Q - inf),
/// which agrees with the closed form U_{k-1}(Q/2)/U_k(Q/2).
struct JwCoefficients {
  double Q = 0.0;
  std::vector<double> values;            // one-based via at()
  std::optional<Index> first_infinite;   // one-based index of first pole

  Index size() const { return static_cast<Index>(values.size()); }
  bool is_infinite(Index k) const { return std::isinf(values.at(k - 1)); }
  /// c_k, one-based. Throws if the entry is a pole.
  double at(Index k) const;
  /// 1/c_k with the convention 1/infinity = 0.
  double inv(Index k) const;
};

JwCoefficients jw_coefficients(double Q, Index N);

/// The projector ladder P_1..P_depth for a verified solution. P_k is stored
/// at its native size n^k; P_{k+1} requires c_k finite, so the ladder
/// stops at the first pole (depth() < requested_depth then).
struct JwLadder {
  TLSolution base;
  Index requested_depth = 0;
  JwCoefficients coeffs;
  std::vector<Matrix> projectors;

  Index depth() const { return static_cast<Index>(projectors.size()); }
  bool stopped_early() const { return depth() < requested_depth; }
  /// P_N, one-based, native size n^N.
  const Matrix& projector(Index N) const;
};

JwLadder jw_ladder(const TLSolution& sol, Index N, Index cap = kDefaultDimCap);

/// Cube relation (P_N - P'_N)^3 = (c_{N-1}/c_N)(P_N - P'_N) in
/// M_{n^{N+1}}; the coefficient is 0 when c_N is a pole. For N = 2 with
/// P_3 available the sharper square form
/// (P_2 - P'_2)^2 = (c_1/c_2)(I - P_3) is checked instead.
Report verify_cube_relation(const JwLadder& ladder, Index N,
                            const Tolerance& tol = {},
                            Index cap = kDefaultDimCap);

/// The four generator/projector contraction identities at level N,
/// all evaluated in M_{n^{N+2}}:
///   S_N  P_N  S_N      = (1/c_N) S_N  P_{N-1}
///   S_{N+1} P'_N S_{N+1} = (1/c_N) S_{N+1} P'_{N-1}
///   S_1  P'_N S_1      = (1/c_N) S_1  P''_{N-1}
///   S_1 P'_N S_{N+1} P'_N S_1 = -(1/(c_N c_{N+1})) S_1 P''_N
///                               + (1/c_N^2) S_1 P''_{N-1}
///   S_{N+1} P'_N S_1 P'_N S_{N+1} = -(1/(c_N c_{N+1})) S_{N+1} P_N
///                                   + (1/c_N^2) S_{N+1} P'_{N-1}
/// Coefficients use the 1/infinity = 0 convention at poles.
Report verify_contraction_identities(const JwLadder& ladder, Index N,
                                     const Tolerance& tol = {},
                                     Index cap = kDefaultDimCap);

/// Closed form r^{N/2} U_N(n / (2 sqrt(r))) for trace(P_N).
double trace_formula(Index N, Index n, Index r);

/// Permutation matrix reversing the tensor factor order of (C^n)^{xN}.
Matrix reversal_permutation(Index n, Index N, Index cap = kDefaultDimCap);

/// P_N rebuilt with the generators taken in reversed order
/// (S_k -> S_{N-k}), evaluated in the full space M_{n^N}. Equals P_N for
/// every solution; used by the flip-invariance checks.
Matrix flipped_projector(const JwLadder& ladder, Index N,
                         Index cap = kDefaultDimCap);

}  // namespace tlforge
