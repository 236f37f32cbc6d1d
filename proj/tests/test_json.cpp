#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "csq/error.hpp"
#include "csq/json_out.hpp"

using namespace csq;

TEST_CASE("number formatting") {
  CHECK(json::format_number(1.0) == "1.000000000000e+00");
  CHECK(json::format_number(-0.000123456789012345) == "-1.234567890123e-04");
  CHECK(json::format_number(std::numeric_limits<double>::quiet_NaN()) == "null");
  CHECK(json::format_number(std::numeric_limits<double>::infinity()) == "null");
}

TEST_CASE("matrix round trip") {
  const ComplexMatrix m{{Complex(1.5, -2.0), Complex(0.0, 1.0)}, {Complex(0.0, -1.0), Complex(4.0, 0.0)}};
  const auto j = json::matrix(m);
  CHECK(j["dim"] == 2);
  CHECK(j["re"][0][0].get<double>() == 1.5);
  CHECK(j["im"][0][0].get<double>() == -2.0);
  const auto back = json::parse_matrix(json::Json::parse(json::dump(j)));
  CHECK(max_abs_diff(back, m) == 0.0);
  CHECK_THROWS_AS(json::parse_matrix(json::Json::parse(R"({"dim": 2, "re": [[1]]})")), InvalidArgument);
}

TEST_CASE("complex values and field order") {
  json::Json j;
  j["zeta"] = json::complex(Complex(1.0, -1.0));
  j["alpha"] = 2.0;
  const std::string s = json::dump(j);
  CHECK(s.find("zeta") < s.find("alpha"));
  CHECK(s.find("\"re\": 1.000000000000e+00") != std::string::npos);
  CHECK(s.find("\"im\": -1.000000000000e+00") != std::string::npos);
  CHECK(s == json::dump(j));
}

TEST_CASE("non-finite values print as null") {
  json::Json j;
  j["x"] = std::numeric_limits<double>::quiet_NaN();
  CHECK(json::dump(j).find("null") != std::string::npos);
}
