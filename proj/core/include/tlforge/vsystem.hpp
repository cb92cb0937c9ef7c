#pragma once

#include <optional>
#include <vector>

#include "tlforge/matrix.hpp"
#include "tlforge/report.hpp"

namespace tlforge {

/// A set V_1..V_r of n x n matrices, orthonormal under the trace pairing
/// tr(V_s* V_m) = delta_sm. Their vectorizations span the candidate
/// subspace of (C^n) (x) (C^n).
struct VSystem {
  Index n = 0;
  std::vector<Matrix> mats;

  Index r() const { return static_cast<Index>(mats.size()); }
};

/// v = sum_ab V(a,b) e_a (x) e_b: row-major flattening, so component
/// (a-1)*n + (b-1) carries V(a,b).
Vector vectorize(const Matrix& V);

/// Max entrywise deviation of the r x r Gram matrix from the identity;
/// passes at abs_eps * r.
Report check_orthonormal(const VSystem& vs, const Tolerance& tol = {});

/// Orthogonal projection sum_s v_s v_s* of rank r onto the spanned
/// subspace. Rejects non-orthonormal input.
Matrix projection_from_vs(const VSystem& vs, const Tolerance& tol = {});

/// The rn x rn partitioned matrix with block (s,m) = V_m conj(V_s);
/// conjugation is entrywise, no transpose.
Matrix w_matrix(const VSystem& vs);

/// Q W unitary <=> T = Q P is a solution of the full system.
Report unitarity_criterion(const VSystem& vs, double Q, const Tolerance& tol = {});

/// If all singular values of W coincide within tolerance, their common
/// reciprocal is the unique Q for which the criterion can pass.
std::optional<double> infer_Q(const VSystem& vs, const Tolerance& tol = {});

/// V'_k = g V_k g^t for unitary g (plain transpose); produces a unitarily
/// equivalent system.
VSystem gauge_transform(const VSystem& vs, const Matrix& g, const Tolerance& tol = {});

/// Independent algebraic route to the same criterion:
/// Q^2 sum_s V_s conj(V_l) V_p^t V_s* = delta_lp I for all pairs (l,p).
Report quartic_identity_check(const VSystem& vs, double Q, const Tolerance& tol = {});

/// Gram-Schmidt over the trace pairing. Not applied implicitly anywhere:
/// re-orthonormalizing changes the basis and hence the W-matrix, so callers
/// must opt in.
VSystem orthonormalize(const VSystem& vs, const Tolerance& tol = {});

}  // namespace tlforge
