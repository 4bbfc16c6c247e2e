#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "resurgence/serialization.hpp"

using namespace resurgence;

TEST_CASE("rationals") {
  CHECK(rational_string(Rational(-139, 51840)) == "-139/51840");
  CHECK(rational_string(Rational(4)) == "4");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
}

TEST_CASE("series round trip") {
  const RationalSeries s = lambda_tilde(12);
  const Json j = series_to_json(s);
  CHECK(j["coeffs"][1][0] == "1");
  CHECK(j["coeffs"][1][1] == "12");
  const RationalSeries back = series_from_json(Json::parse(j.dump()));
  CHECK(back.body == s.body);
  CHECK(back.shift == s.shift);
  CHECK_THROWS_AS(series_from_json(Json::object()), DomainError);
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("1.5-2j").value == Complex(1.5, -2.0));
  CHECK(parse_complex("3j").value == Complex(0.0, 3.0));
  CHECK(parse_complex("-2").value == Complex(-2.0, 0.0));
  CHECK(parse_complex("-1e-3+4.5e1j").value == Complex(-1e-3, 45.0));
  const ParsedComplex p = parse_complex("2@4");
  CHECK(p.polar);
  CHECK(p.theta == 4.0);
  CHECK(std::abs(p.value - std::polar(2.0, 4.0)) < 1e-15);
  CHECK(p.surface().theta == 4.0);
  CHECK(parse_complex("1+1j").surface().theta == doctest::Approx(std::numbers::pi / 4.0));
  CHECK_THROWS_AS(parse_complex(""), DomainError);
  CHECK_THROWS_AS(parse_complex("abc"), DomainError);
  CHECK_THROWS_AS(parse_complex("-1@0"), DomainError);
  CHECK_THROWS_AS(parse_complex("1+2i"), DomainError);
}

TEST_CASE("records") {
  LaplaceResult r;
  r.z = Complex(1.0, 2.0);
  r.value = Complex(0.5, -0.25);
  r.panels = 7;
  const Json j = laplace_to_json(r);
  CHECK(j["z"][0] == 1.0);
  CHECK(j["z"][1] == 2.0);
  CHECK(j["value"][1] == -0.25);
  CHECK(j["panels"] == 7);
  RealMajorResult m;
  m.qpath_nodes = 5;
  CHECK(real_major_to_json(2.0, 0.0, m)["qpath_nodes"] == 5);
}

TEST_CASE("grid CSV") {
  std::vector<GridSample> s = {{0.0, 0.0, 0.0, "origin"}, {Complex(1.0, 2.0), 0.0, Complex(3.0, 4.0), "value"}};
  const std::string csv = grid_to_csv(s);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == grid_csv_header());
  std::getline(in, line);
  CHECK(line.find("nan") != std::string::npos);
  CHECK(line.find("origin") != std::string::npos);
  std::getline(in, line);
  CHECK(line.rfind("1,2,0,3,4,value", 0) == 0);
}
