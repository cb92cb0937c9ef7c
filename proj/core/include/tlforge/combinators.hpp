#pragma once

#include "tlforge/catalog.hpp"

namespace tlforge {

/// Block-diagonal combination of two instances of equal rank:
/// V~_k = (sqrt(Q1) V1_k (+) sqrt(Q2) V2_k)/sqrt(Q1+Q2); the result has
/// n = n1 + n2, the same r, and Q = Q1 + Q2.
FamilyInstance direct_sum(const FamilyInstance& a, const FamilyInstance& b);

/// Tensor product with a rank-one instance: V~_k = Va_k (x) Vb,
/// n = na * nb, r = ra, Q = Qa * Qb. b must have rank one.
FamilyInstance product_rank_one(const FamilyInstance& a, const FamilyInstance& b);

/// Fusion T~ = T23 T12 T34 T23 in M_{n^4}; the fused solution lives on
/// sites of dimension n^2 with Q~ = Q^2 and rank r^2. Verified before
/// returning.
TLSolution fuse(const TLSolution& sol, const Tolerance& tol = {},
                Index cap = kDefaultDimCap);

/// Least Q for which the r = 2, 3, 4 recipes produce a solution of size n:
///   r=2: n = 3k-m (m = 0..2)       -> 2(k-m) + m sqrt(2)
///   r=3: n = 4k-m (m = 0..3), n!=5 -> 2(k-m) + m sqrt(3)
///   r=4: n = 5k-m, m = 0..2        -> 2k
///   r=4: n = 5k-m, m = 3..4        -> 2k-1
/// Requires n > r; (r,n) = (3,5) is rejected.
double q_threshold(Index r, Index n);

/// Assembles an explicit instance of rank r and size n verifying at
/// Q = q_target, for any q_target >= q_threshold(r, n). Deterministic: the
/// Q slack above the threshold is carried by the first tunable block.
FamilyInstance construct_small_rank(Index r, Index n, double q_target);

}  // namespace tlforge
