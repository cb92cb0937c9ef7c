#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tlforge/catalog.hpp"
#include "tlforge/jones_wenzl.hpp"

using namespace tlforge;

namespace {

// Independent oracle: the product form U_m(t) = 2^m prod_k (t - cos(pi k/(m+1))).
double chebyshev_u_product(Index m, double t) {
  double out = std::pow(2.0, static_cast<double>(m));
  for (Index k = 1; k <= m; ++k)
    out *= t - std::cos(M_PI * static_cast<double>(k) / static_cast<double>(m + 1));
  return out;
}

// |z| solving |z| + 1/|z| = q.
double modulus_for(double q) { return (q + std::sqrt(q * q - 4.0)) / 2.0; }

}  // namespace

TEST_CASE("chebyshev recurrence against the product form") {
  CHECK(chebyshev_u(0, 0.37) == 1.0);
  CHECK(chebyshev_u(1, 0.5) == doctest::Approx(1.0));   // U_1(t) = 2t
  CHECK(chebyshev_u(2, 1.0) == doctest::Approx(3.0));   // 2*1*2 - 1
  for (double t : {-1.3, -0.4, 0.2, 0.7, 1.0, 1.9})
    for (Index m = 0; m <= 12; ++m)
      CHECK(chebyshev_u(m, t) ==
            doctest::Approx(chebyshev_u_product(m, t)).epsilon(1e-9));
}

TEST_CASE("coefficient sequence values and poles") {
  const auto seq = jw_coefficients(2.0, 5);
  const double expect[] = {0.5, 2.0 / 3.0, 0.75, 0.8, 5.0 / 6.0};
  for (Index k = 1; k <= 5; ++k) CHECK(seq.at(k) == doctest::Approx(expect[k - 1]));
  CHECK_FALSE(seq.first_infinite);

  CHECK(jw_coefficients(7.3, 1).at(1) == doctest::Approx(1.0 / 7.3));

  const auto s2 = jw_coefficients(std::sqrt(2.0), 4);
  CHECK(s2.at(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s2.at(2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(s2.is_infinite(3));
  CHECK(s2.first_infinite == 3);
  CHECK(s2.inv(3) == 0.0);
  CHECK_THROWS_AS(s2.at(3), std::domain_error);
  // Moebius continuation past the pole agrees with the closed form.
  CHECK(s2.at(4) == doctest::Approx(0.0));

  // Q = 1 pole is exact: c_2 = 1/(1-1).
  const auto s1 = jw_coefficients(1.0, 3);
  CHECK(s1.first_infinite == 2);
}

TEST_CASE("coefficient recursion agrees with the Chebyshev closed form") {
  for (double Q : {1.2, 2.0, 2.7, 3.5}) {
    const auto seq = jw_coefficients(Q, 20);
    for (Index k = 1; k <= 20; ++k) {
      if (seq.is_infinite(k)) continue;
      const double closed = chebyshev_u(k - 1, Q / 2.0) / chebyshev_u(k, Q / 2.0);
      CHECK(std::abs(seq.at(k) - closed) <= 1e-10);
    }
  }
}

TEST_CASE("ladder projectors: P_2 closed form, idempotency, annihilation") {
  const auto sol = to_solution(rank_one(2, Complex(1.0)));  // Q = 2
  const auto ladder = jw_ladder(sol, 4);
  CHECK(ladder.depth() == 4);

  const Matrix P2 = ladder.projector(2);
  CHECK(frobenius_dist(P2, identity(4) - sol.T / sol.Q) < 1e-12);
  CHECK(trace(P2).real() == doctest::Approx(3.0));  // n^2 - r

  for (Index N = 1; N <= 4; ++N) {
    const Matrix& P = ladder.projector(N);
    CHECK((P * P - P).norm() < 1e-10);
    CHECK((P - P.adjoint()).norm() < 1e-10);
    for (Index k = 1; k < N; ++k) {
      const Matrix S = embed(sol.T, sol.n, k, N);
      CHECK((S * P).norm() < 1e-9);
      CHECK((P * S).norm() < 1e-9);
    }
  }
}

TEST_CASE("ladder stops at the coefficient pole; P_3 vanishes for the sqrt2 family") {
  const auto sol = to_solution(q_sqrt2());
  const auto ladder = jw_ladder(sol, 6);
  CHECK(ladder.requested_depth == 6);
  CHECK(ladder.depth() == 3);
  CHECK(ladder.stopped_early());
  CHECK(ladder.coeffs.first_infinite == 3);
  // At the first pole index the represented projector is numerically zero.
  CHECK(ladder.projector(3).norm() < 1e-12);
  CHECK_THROWS_AS(ladder.projector(4), std::out_of_range);
}

TEST_CASE("sqrt3 family: pole at level 5 and P_5 = 0") {
  // Q = sqrt(3) = 2 cos(pi/6): the ladder reaches P_5 and stops there.
  const auto sol = to_solution(q_sqrt3());
  const auto ladder = jw_ladder(sol, 6);
  CHECK(ladder.depth() == 5);
  CHECK(ladder.coeffs.first_infinite == 5);
  CHECK(ladder.projector(5).norm() < 1e-7);
}

TEST_CASE("trace formula") {
  CHECK(trace_formula(1, 5, 3) == doctest::Approx(5.0));        // tr P_1 = n
  CHECK(trace_formula(2, 5, 3) == doctest::Approx(22.0));       // n^2 - r
  CHECK(trace_formula(3, 2, 1) == doctest::Approx(4.0));        // 2^3 - 2*2

  const auto sol = to_solution(rank_one(2, Complex(1.0)));
  const auto ladder = jw_ladder(sol, 6, 1 << 12);
  for (Index N = 1; N <= ladder.depth(); ++N) {
    const double formula = trace_formula(N, sol.n, sol.r);
    const double tr = trace(ladder.projector(N)).real();
    CHECK(std::abs(tr - formula) <= 1e-7 * std::pow(2.0, N));
  }

  // other shapes: r > 1 and a pole-bearing Q
  for (const auto& inst : {n_r_plus_1(3, Complex(2.0), Complex(1.0)), q_sqrt3()}) {
    const auto s = to_solution(inst);
    const auto l = jw_ladder(s, 4);
    for (Index N = 1; N <= l.depth(); ++N)
      CHECK(std::abs(trace(l.projector(N)).real() - trace_formula(N, s.n, s.r)) <=
            1e-7 * std::pow(static_cast<double>(s.n), N));
  }
}

TEST_CASE("cube relation") {
  // N = 2 goes through the square form; larger N through the cube.
  for (double q : {2.0, 2.5, 3.0}) {
    const auto sol = to_solution(rank_one(2, Complex(modulus_for(q))));
    CHECK(sol.Q == doctest::Approx(q));
    const auto ladder = jw_ladder(sol, 5);
    for (Index N = 2; N <= 4; ++N) CHECK(verify_cube_relation(ladder, N).pass());
  }
  // Trivial solution: Q = 1 is itself a pole point (c_2 infinite), so the
  // ladder ends at P_2 and the N = 2 check runs the cube form with a zero
  // coefficient; both sides vanish identically.
  const auto triv = to_solution(trivial(2));
  const auto tl = jw_ladder(triv, 4);
  CHECK(tl.depth() == 2);
  const auto rep = verify_cube_relation(tl, 2);
  CHECK(rep.pass());
  CHECK(rep.checks[0].relation == "cube_relation");
}

TEST_CASE("contraction identities") {
  const auto sol = to_solution(rank_one(2, Complex(modulus_for(3.0))));
  const auto ladder = jw_ladder(sol, 4);
  for (Index N = 2; N <= 3; ++N) {
    const auto rep = verify_contraction_identities(ladder, N);
    CHECK(rep.checks.size() == 5);
    CHECK(rep.pass());
  }

  const auto s3 = to_solution(q_sqrt3());
  const auto l3 = jw_ladder(s3, 4);
  CHECK(verify_contraction_identities(l3, 2).pass());
  CHECK(verify_contraction_identities(l3, 3).pass());  // space 3^5, coefficients finite through level 4

  const auto triv = to_solution(trivial(2));
  CHECK(verify_contraction_identities(jw_ladder(triv, 3), 2).pass());
}

TEST_CASE("complement of P_3 is positive semidefinite for the n=2 rank-one solution") {
  const auto sol = to_solution(rank_one(2, Complex(1.0)));
  const auto ladder = jw_ladder(sol, 3);
  const Matrix gap = identity(8) - ladder.projector(3);
  CHECK(is_psd(gap));
  CHECK(gap.norm() > 1.0);  // nonzero
}

TEST_CASE("flip invariance via the reversed-generator construction") {
  for (const auto& inst : {rank_one(2, Complex(1.7, 0.4)), q_sqrt3()}) {
    const auto sol = to_solution(inst);
    const auto ladder = jw_ladder(sol, 3);
    const Matrix flipped = flipped_projector(ladder, 3, 1 << 12);
    CHECK(frobenius_dist(flipped, ladder.projector(3)) < 1e-9);
  }
}

TEST_CASE("reversal permutation is an involution intertwining the factors") {
  const Matrix F = reversal_permutation(2, 3);
  CHECK(is_unitary(F));
  CHECK(frobenius_dist(F * F, identity(8)) == 0.0);
  auto rng = testing::make_rng(5);
  const Matrix a = testing::random_matrix(rng, 2, 2);
  const Matrix b = testing::random_matrix(rng, 2, 2);
  const Matrix c = testing::random_matrix(rng, 2, 2);
  CHECK(frobenius_dist(F * kron(kron(a, b), c) * F, kron(kron(c, b), a)) < 1e-12);
}
