#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tlforge/catalog.hpp"
#include "tlforge/classify.hpp"

using namespace tlforge;

TEST_CASE("trivial") {
  const auto t1 = trivial(1);
  CHECK(t1.Q == 1.0);
  CHECK(t1.r() == 1);

  const auto t2 = trivial(2);
  CHECK(t2.r() == 4);
  CHECK(classify(2, 4, 1.0).solution_class == SolutionClass::A);
  CHECK(frobenius_dist(solution_matrix(t2), identity(4)) < 1e-12);

  CHECK(to_solution(trivial(3)).r == 9);
}

TEST_CASE("rank_one") {
  CHECK(rank_one(2, Complex(1.0)).Q == doctest::Approx(2.0));
  for (Index n = 1; n <= 5; ++n)
    CHECK(rank_one(n, Complex(0.6, 0.8)).Q == doctest::Approx(static_cast<double>(n)));
  CHECK(rank_one(3, Complex(2.0)).Q == doctest::Approx(21.0 / 4.0));
  CHECK(rank_one(3, Complex(0.5)).Q > 3.0);
  CHECK_THROWS_AS(rank_one(3, Complex(0.0)), std::invalid_argument);

  const auto sol = to_solution(rank_one(4, Complex(0.5, 0.5)));
  CHECK(sol.r == 1);
}

TEST_CASE("q_sqrt2 and q_sqrt3") {
  const auto s2 = q_sqrt2();
  CHECK(s2.Q == doctest::Approx(std::sqrt(2.0)));
  CHECK(s2.n() * s2.n() == 2 * s2.r());  // n^2 = Q^2 r
  const auto sol2 = to_solution(s2);
  CHECK(trace(sol2.T).real() == doctest::Approx(std::sqrt(2.0) * 2.0));

  const auto s3 = q_sqrt3();
  CHECK(s3.Q == doctest::Approx(std::sqrt(3.0)));
  CHECK(s3.n() * s3.n() == 3 * s3.r());
  CHECK(to_solution(s3).r == 3);
}

TEST_CASE("n4r4 parameter handling") {
  const double h = 0.5;
  const auto sym = n4r4(Complex(h), Complex(h), Complex(h), Complex(h));
  CHECK(sym.Q == doctest::Approx(2.0));
  CHECK(to_solution(sym).r == 4);

  const double a = std::sqrt(0.45), b = std::sqrt(0.05);
  const auto skew = n4r4(Complex(a), Complex(b), Complex(a), Complex(b));
  CHECK(skew.Q == doctest::Approx(10.0 / 3.0));
  CHECK(to_solution(skew).r == 4);

  CHECK_THROWS_AS(n4r4(Complex(1.0), Complex(1.0), Complex(0.0), Complex(0.0)),
                  std::invalid_argument);  // moduli not normalized
  CHECK_THROWS_AS(n4r4(Complex(std::sqrt(0.5)), Complex(0.0), Complex(std::sqrt(0.5)),
                       Complex(0.0)),
                  std::invalid_argument);  // (|z1|+|z3|)(|z2|+|z4|) = 0
}

TEST_CASE("n4r4 Q range: zeta + 1/zeta >= 2") {
  auto rng = testing::make_rng(1234);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Complex, 4> z;
    double total = 0.0;
    for (auto& v : z) {
      v = Complex(gauss(rng), gauss(rng));
      total += std::norm(v);
    }
    for (auto& v : z) v /= std::sqrt(total);
    const auto inst = n4r4(z[0], z[1], z[2], z[3]);
    const double zeta =
        std::sqrt((std::norm(z[0]) + std::norm(z[2])) / (std::norm(z[1]) + std::norm(z[3])));
    CHECK(inst.Q == doctest::Approx(zeta + 1.0 / zeta));
    CHECK(inst.Q >= 2.0 - 1e-12);
  }
}

TEST_CASE("n_r_plus_1") {
  // n = 2 recovers the rank-one structure
  const auto small = n_r_plus_1(2, Complex(1.0), Complex(1.0));
  CHECK(small.r() == 1);
  CHECK(small.Q == doctest::Approx(2.0));
  CHECK(frobenius_dist(small.vs.mats[0], rank_one(2, Complex(1.0)).vs.mats[0]) < 1e-12);

  for (Index n : {3, 5, 8})
    CHECK(n_r_plus_1(n, Complex(0.0, 2.5), Complex(2.5)).Q == doctest::Approx(2.0));

  CHECK(n_r_plus_1(5, Complex(3.0), Complex(1.0)).Q == doctest::Approx(10.0 / 3.0));
  CHECK_THROWS_AS(n_r_plus_1(4, Complex(0.0), Complex(1.0)), std::invalid_argument);
  CHECK(to_solution(n_r_plus_1(6, Complex(1.0, 1.0), Complex(0.5))).r == 5);
}

TEST_CASE("q2 families") {
  const auto b2 = q2_block(2);
  CHECK(b2.r() == 1);
  CHECK(b2.Q == 2.0);
  CHECK(to_solution(b2).r == 1);
  CHECK(to_solution(q2_block(4)).r == 4);
  CHECK_THROWS_AS(q2_block(3), std::invalid_argument);

  CHECK(q2_tensor(4, Complex(0.0, 1.0)).Q == doctest::Approx(2.0));
  CHECK(q2_tensor(4, Complex(2.0)).Q == doctest::Approx(2.5));
  CHECK(to_solution(q2_tensor(4, Complex(2.0))).r == 4);
  CHECK_THROWS_AS(q2_tensor(4, Complex(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(q2_tensor(5, Complex(1.0)), std::invalid_argument);
}

TEST_CASE("catalog families land in their classes") {
  auto cls = [](const FamilyInstance& f) {
    return classify(f.n(), f.r(), f.Q).solution_class;
  };
  CHECK(cls(trivial(2)) == SolutionClass::A);
  CHECK(cls(q_sqrt2()) == SolutionClass::B);
  CHECK(cls(q_sqrt3()) == SolutionClass::C);
  CHECK(cls(rank_one(2, Complex(1.0))) == SolutionClass::D);
  CHECK(cls(n4r4(Complex(0.5), Complex(0.5), Complex(0.5), Complex(0.5))) == SolutionClass::D);
  CHECK(cls(n_r_plus_1(4, Complex(1.0), Complex(3.0))) == SolutionClass::D);
  CHECK(cls(q2_block(4)) == SolutionClass::D);
  CHECK(cls(q2_tensor(4, Complex(1.0))) == SolutionClass::D);
}

TEST_CASE("completion search finds the reference pattern") {
  const auto survivors = derive_n4r4_completion(0xbead5eed, 2);
  REQUIRE(!survivors.empty());
  // a single support/coefficient pattern, differing only in row signs
  for (const auto& s : survivors) {
    CHECK(s.col == n4r4_reference_completion().col);
    CHECK(s.coeff == n4r4_reference_completion().coeff);
  }
  CHECK(survivors.front() == n4r4_reference_completion());
  CHECK(survivors.size() == 4);
}

TEST_CASE("family names round-trip") {
  for (auto f : {Family::Trivial, Family::RankOne, Family::Sqrt2, Family::Sqrt3,
                 Family::N4R4, Family::NRplus1, Family::Q2Block, Family::Q2Tensor,
                 Family::Composite})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_FALSE(family_from_name("nope").has_value());
}
