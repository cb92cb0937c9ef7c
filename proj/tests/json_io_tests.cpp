#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tlforge/json_io.hpp"
#include "tlforge/parse.hpp"

using namespace tlforge;
using tlforge::testing::make_rng;
using tlforge::testing::random_matrix;

TEST_CASE("matrix json round-trip preserves entries") {
  auto rng = make_rng(77);
  for (int i = 0; i < 10; ++i) {
    const Matrix m = random_matrix(rng, 3, 5);
    const Matrix back = matrix_from_json(matrix_to_json(m));
    CHECK(frobenius_dist(m, back) == 0.0);
  }
}

TEST_CASE("matrix json layout is row-major") {
  const Json j = matrix_to_json(matrix_unit(2, 1, 2));
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["data"][1][0] == 1.0);
  CHECK(j["data"][2][0] == 0.0);
}

TEST_CASE("matrix json rejects malformed input") {
  Json j = matrix_to_json(identity(2));
  j["data"].erase(3);
  CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);

  Json j2 = matrix_to_json(identity(2));
  j2["rows"] = 3;
  CHECK_THROWS_AS(matrix_from_json(j2), std::invalid_argument);

  Json j3 = matrix_to_json(identity(2));
  j3["data"][0] = {1.0};
  CHECK_THROWS_AS(matrix_from_json(j3), std::invalid_argument);

  CHECK_THROWS_AS(matrix_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("vsystem json round-trip") {
  const auto inst = q_sqrt3();
  const VSystem back = vsystem_from_json(vsystem_to_json(inst.vs));
  CHECK(back.n == 3);
  REQUIRE(back.r() == 3);
  for (Index k = 0; k < 3; ++k)
    CHECK(frobenius_dist(back.mats[k], inst.vs.mats[k]) == 0.0);

  Json j = vsystem_to_json(inst.vs);
  j["r"] = 2;
  CHECK_THROWS_AS(vsystem_from_json(j), std::invalid_argument);
}

TEST_CASE("family instance json round-trip") {
  const auto inst = n_r_plus_1(4, Complex(2.0), Complex(1.0, -1.0));
  const auto back = family_from_json(family_to_json(inst));
  CHECK(back.family == Family::NRplus1);
  CHECK(back.Q == doctest::Approx(inst.Q));
  CHECK(back.params.at("z1") == inst.params.at("z1"));
  CHECK(frobenius_dist(back.vs.mats[2], inst.vs.mats[2]) == 0.0);
}

TEST_CASE("report json shape") {
  Report rep;
  rep.checks.push_back({"T1:hermitian", 1.5e-12, 1e-9, true});
  const Json j = report_to_json(rep);
  REQUIRE(j.is_array());
  CHECK(j[0]["relation"] == "T1:hermitian");
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["residual"] == doctest::Approx(1.5e-12));
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("1") == Complex(1.0));
  CHECK(parse_complex("-2.5") == Complex(-2.5));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1+2i") == Complex(1.0, 2.0));
  CHECK(parse_complex("0.5-0.5i") == Complex(0.5, -0.5));
  CHECK(parse_complex(" 3e-2+1.5e1i ") == Complex(0.03, 15.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("banana"), std::invalid_argument);

  const auto list = parse_complex_list("1, 2i ,0.5+0.5i");
  REQUIRE(list.size() == 3);
  CHECK(list[1] == Complex(0.0, 2.0));
  CHECK(list[2] == Complex(0.5, 0.5));

  // format -> parse round-trip
  const Complex z(0.123456789012345, -9.87e-7);
  CHECK(std::abs(parse_complex(format_complex(z)) - z) == 0.0);
}
