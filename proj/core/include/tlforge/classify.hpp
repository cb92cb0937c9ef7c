#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlforge/matrix.hpp"

namespace tlforge {

/// The four admissible (n, r, Q) regimes, or Excluded when no solution can
/// exist for the triple.
enum class SolutionClass { A, B, C, D, Excluded };

std::string solution_class_name(SolutionClass c);

struct ClassReport {
  Index n = 0;
  Index r = 0;
  double Q = 0.0;
  SolutionClass solution_class = SolutionClass::Excluded;
  bool s_integral = false;  // whether n^2 / r is an integer
  Index s = 0;              // the integer value when it is
  bool q2_exists = false;
  std::optional<Index> q2_divisor;
  bool conjecture_ok = false;  // CONJECTURAL bound, annotation only
  std::vector<std::string> notes;
};

/// Class membership:
///   A: r = n^2 and Q ~ 1,   B: 2r = n^2 and Q ~ sqrt(2),
///   C: 3r = n^2 and Q ~ sqrt(3),
///   D: 4r <= n^2 and Q >= max(2, n/r) - tol,
/// Excluded otherwise. Integrality of n^2/r is exact; only Q is compared
/// within tolerance.
ClassReport classify(Index n, Index r, double Q, const Tolerance& tol = {});

/// k-th sub-critical value 2 cos(pi/(k+2)), k >= 1.
double j_infty(Index k);

/// Index k <= 10^4 with |Q - j_infty(k)| <= tol, if any. Beyond k = 10^4
/// the gaps to 2 fall under double resolution and membership is not
/// decided.
std::optional<Index> is_in_j_infty(double Q, double tol = 1e-9);

/// Existence of a Q = 2 solution for (n, r), evaluated through both
/// criteria: sqrt(n^2 - 4r) integral, and r having a divisor m with
/// n = m + r/m. The two must agree; the largest witness divisor
/// m = (n + sqrt(n^2-4r))/2 is returned when they hold.
std::pair<bool, std::optional<Index>> q2_existence(Index n, Index r);

/// Q (r+1) >= 2n - tol. Conjectural: annotates reports and never gates
/// construction or verification.
bool conjecture_bound(Index n, Index r, double Q, double tol = 1e-9);

/// Whether the constant R-matrix can be unitary: n^2 = Q^2 r with
/// Q in {1, sqrt 2, sqrt 3}, or Q = 2 with n^2 - 4r a perfect square.
bool unitary_r_condition(Index n, Index r, double Q, double tol = 1e-9);

}  // namespace tlforge
