#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tlforge/tl_system.hpp"
#include "tlforge/vsystem.hpp"

namespace tlforge {

enum class Family {
  Trivial,
  RankOne,
  Sqrt2,
  Sqrt3,
  N4R4,
  NRplus1,
  Q2Block,
  Q2Tensor,
  Composite,  // built by the sum/product/recipe combinators
};

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// A V-system together with the Q at which the unitarity criterion passes.
/// Every constructor re-checks orthonormality before returning; rank of the
/// associated solution Q * P equals vs.r().
struct FamilyInstance {
  VSystem vs;
  double Q = 0.0;
  Family family = Family::Trivial;
  std::map<std::string, std::string> params;

  Index n() const { return vs.n; }
  Index r() const { return vs.r(); }
};

/// T = Q * P for the instance.
Matrix solution_matrix(const FamilyInstance& inst, const Tolerance& tol = {});

/// Full verification of the instance; throws VerificationError on failure.
TLSolution to_solution(const FamilyInstance& inst, const Tolerance& tol = {},
                       Index cap = kDefaultDimCap);

// ---------------------------------------------------------------------------
// Explicit families
// ---------------------------------------------------------------------------

/// All n^2 matrix units of M_n; Q = 1, r = n^2, T = I.
FamilyInstance trivial(Index n);

/// Single anti-diagonal matrix gamma_n sum_k z^k E_{k+1,n-k} with
/// Q = sum_k |z|^{2k+1-n} in [n, inf); r = 1.
FamilyInstance rank_one(Index n, Complex z);

/// n = 2, r = 2, Q = sqrt(2).
FamilyInstance q_sqrt2();

/// n = 3, r = 3, Q = sqrt(3), built on the cube root of unity.
FamilyInstance q_sqrt3();

/// n = r = 4 generalized-permutation family. Requires
/// |z1|^2+|z2|^2+|z3|^2+|z4|^2 = 1 and (|z1|+|z3|)(|z2|+|z4|) != 0;
/// Q = 1/sqrt((|z1|^2+|z3|^2)(|z2|^2+|z4|^2)) in [2, inf).
FamilyInstance n4r4(Complex z1, Complex z2, Complex z3, Complex z4);

/// Two-entry matrices V_k = c (z1 E_{1,k+1} + z2 E_{k+1,1}), k = 1..n-1;
/// r = n-1, Q = |z1|/|z2| + |z2|/|z1| in [2, inf).
FamilyInstance n_r_plus_1(Index n, Complex z1, Complex z2);

/// Doubled matrix units (1/sqrt 2)(V (+) V) of M_{n/2}; n even, Q = 2,
/// r = n^2/4.
FamilyInstance q2_block(Index n);

/// Matrix units of M_{n/2} tensored with the weighted swap
/// (E_12 + z E_21)/sqrt(1+|z|^2); n even, Q = |z| + 1/|z|, r = n^2/4.
FamilyInstance q2_tensor(Index n, Complex z);

// ---------------------------------------------------------------------------
// Derivation of the fourth n=r=4 matrix
// ---------------------------------------------------------------------------

/// One candidate completion V_4 = sum_i sign[i] * conj(z_{coeff[i]}) *
/// E_{i, col[i]} (all arrays one-based values, index i = row).
struct V4Candidate {
  std::array<int, 4> col;
  std::array<int, 4> coeff;
  std::array<int, 4> sign;

  Matrix materialize(const std::array<Complex, 4>& z) const;
  bool operator==(const V4Candidate&) const = default;
};

/// Exhaustive search over single-entry-per-row candidates (support
/// permutation x coefficient permutation x signs) for completions of
/// V_1..V_3 that keep the system orthonormal and Q W unitary at `trials`
/// random admissible parameter points. All survivors share one support and
/// coefficient pattern and differ only by row sign flips; the first entry
/// of the returned vector is the canonical representative used by n4r4().
std::vector<V4Candidate> derive_n4r4_completion(std::uint64_t seed,
                                                int trials = 3,
                                                const Tolerance& tol = {});

/// The completion hard-coded in n4r4(): columns (4,3,2,1), coefficients
/// (z3,z4,z1,z2) conjugated, signs (+,+,-,-).
V4Candidate n4r4_reference_completion();

}  // namespace tlforge
