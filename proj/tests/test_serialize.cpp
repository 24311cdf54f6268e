#include <doctest.h>

#include <cstdio>

#include "x1/serialize.hpp"
#include "x1/x1core.hpp"

using namespace x1;

TEST_CASE("polynomial text form") {
  const Polynomial p({Rational(1, 2), Rational(-3), Rational(0), Rational(1)});
  CHECK(poly_text(p) == "1/2 - 3*x + x^3");
  CHECK(parse_poly_text(poly_text(p)) == p);
  CHECK(poly_text(Polynomial()) == "0");
  CHECK(parse_poly_text("0") == Polynomial());
  CHECK(parse_poly_text("-x") == Polynomial({0, -1}));
  CHECK(parse_poly_text("x^2 - 1") == Polynomial({-1, 0, 1}));
  CHECK(parse_poly_text("2x + 1") == Polynomial({1, 2}));
  CHECK(parse_poly_text(" - 1/2 + x ") == Polynomial({Rational(-1, 2), 1}));
  CHECK_THROWS_AS(parse_poly_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_text("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_text("3*"), std::invalid_argument);
}

TEST_CASE("json round trips") {
  const Polynomial p({Rational(1, 3), Rational(0), Rational(-2)});
  CHECK(poly_from_json(poly_json(p)) == p);
  CHECK(poly_from_json(Json("x^2 - 1")) == Polynomial({-1, 0, 1}));
  CHECK(poly_from_json(Json::array({1, 2})) == Polynomial({1, 2}));

  const X1Params params = X1Params::from_abk(
      Rational(1, 2), Rational(3), Rational(8), Rational(6), Rational(1));
  const DiffOp2 T = make_x1_operator(params);
  const DiffOp2 back = diffop_from_json(diffop_json(T));
  CHECK(back == T);
}

TEST_CASE("subspace files") {
  const Subspace e = x1_flag_basis(4, Rational(1, 2), Rational(1));
  const Json j = subspace_json(e);
  const Subspace back = subspace_from_json(j);
  CHECK(back.ambient_degree() == 4);
  CHECK(back.same_span(e));

  const std::string path = "/tmp/x1_test_subspace.json";
  write_subspace_file(path, e);
  const Subspace fromfile = read_subspace_file(path);
  CHECK(fromfile.same_span(e));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_subspace_file("/tmp/definitely_missing_x1.json"),
                  std::runtime_error);
}
