#include "tlforge/classify.hpp"

#include <cmath>

namespace tlforge {

std::string solution_class_name(SolutionClass c) {
  switch (c) {
    case SolutionClass::A: return "A";
    case SolutionClass::B: return "B";
    case SolutionClass::C: return "C";
    case SolutionClass::D: return "D";
    case SolutionClass::Excluded: return "excluded";
  }
  return "unknown";
}

static std::optional<Index> integer_sqrt(Index x) {
  if (x < 0) return std::nullopt;
  const auto root = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(x))));
  for (Index c = std::max<Index>(0, root - 1); c <= root + 1; ++c)
    if (c * c == x) return c;
  return std::nullopt;
}

ClassReport classify(Index n, Index r, double Q, const Tolerance& tol) {
  if (n < 1 || r < 1) throw std::invalid_argument("classify: n, r must be >= 1");
  if (!(Q > 0.0)) throw std::invalid_argument("classify: Q must be positive");
  ClassReport rep;
  rep.n = n;
  rep.r = r;
  rep.Q = Q;
  const Index n2 = n * n;
  rep.s_integral = (n2 % r == 0);
  rep.s = rep.s_integral ? n2 / r : 0;

  const double eps = tol.abs_eps;
  auto q_is = [&](double v) { return std::abs(Q - v) <= eps; };
  if (r == n2 && q_is(1.0)) {
    rep.solution_class = SolutionClass::A;
  } else if (2 * r == n2 && q_is(std::sqrt(2.0))) {
    rep.solution_class = SolutionClass::B;
  } else if (3 * r == n2 && q_is(std::sqrt(3.0))) {
    rep.solution_class = SolutionClass::C;
  } else if (4 * r <= n2 &&
             Q >= std::max(2.0, static_cast<double>(n) / static_cast<double>(r)) - eps) {
    rep.solution_class = SolutionClass::D;
  } else {
    rep.solution_class = SolutionClass::Excluded;
    if (Q * static_cast<double>(r) < static_cast<double>(n))
      rep.notes.push_back("violates the rank bound Q r >= n");
  }

  auto [exists, divisor] = q2_existence(n, r);
  rep.q2_exists = exists;
  rep.q2_divisor = divisor;
  rep.conjecture_ok = conjecture_bound(n, r, Q);
  if (Q < 2.0 && std::abs(Q - 2.0) > eps && !is_in_j_infty(Q, eps) &&
      rep.solution_class != SolutionClass::Excluded)
    rep.notes.push_back("Q < 2 but not resolved inside the sub-critical set");
  if (std::abs(Q - 2.0) < 1e-7 && Q < 2.0)
    rep.notes.push_back("sub-critical membership indeterminate this close to 2");
  return rep;
}

double j_infty(Index k) {
  if (k < 1) throw std::invalid_argument("j_infty: k must be >= 1");
  return 2.0 * std::cos(M_PI / static_cast<double>(k + 2));
}

std::optional<Index> is_in_j_infty(double Q, double tol) {
  if (Q <= 0.0 || Q >= 2.0 + tol) return std::nullopt;
  constexpr Index kMax = 10000;
  for (Index k = 1; k <= kMax; ++k) {
    const double v = j_infty(k);
    if (std::abs(Q - v) <= tol) return k;
    if (v > Q + tol) return std::nullopt;  // sequence is increasing
  }
  return std::nullopt;
}

std::pair<bool, std::optional<Index>> q2_existence(Index n, Index r) {
  if (n < 1 || r < 1) throw std::invalid_argument("q2_existence: n, r must be >= 1");
  const auto root = integer_sqrt(n * n - 4 * r);
  const bool square_form = root.has_value();

  bool divisor_form = false;
  std::optional<Index> witness;
  for (Index m = 1; m * m <= r; ++m) {
    if (r % m != 0) continue;
    const Index other = r / m;
    if (m + other == n) {
      divisor_form = true;
      witness = std::max(m, other);
    }
  }
  if (square_form != divisor_form)
    throw std::logic_error("q2_existence: criteria disagree for n=" +
                           std::to_string(n) + ", r=" + std::to_string(r));
  if (square_form && !witness) witness = (n + *root) / 2;
  return {square_form, square_form ? witness : std::nullopt};
}

bool conjecture_bound(Index n, Index r, double Q, double tol) {
  return Q * static_cast<double>(r + 1) >= 2.0 * static_cast<double>(n) - tol;
}

bool unitary_r_condition(Index n, Index r, double Q, double tol) {
  const Index n2 = n * n;
  const double candidates[] = {1.0, std::sqrt(2.0), std::sqrt(3.0)};
  const Index squares[] = {1, 2, 3};
  for (int i = 0; i < 3; ++i)
    if (std::abs(Q - candidates[i]) <= tol && n2 == squares[i] * r) return true;
  if (std::abs(Q - 2.0) <= tol && integer_sqrt(n2 - 4 * r).has_value()) return true;
  return false;
}

}  // namespace tlforge
