#include <doctest.h>

#include <cstdlib>

#include "slocc/errors.hpp"
#include "slocc/io.hpp"
#include "test_support.hpp"

using namespace slocc;
using slocc::testing::max_abs;

namespace {

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_operator_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NotHermitian;  // sentinel: no error
}

}  // namespace

TEST_CASE("parse complex form") {
  const std::string text =
      R"({"re": [[0,0,0,0],[0,0.5,-0.5,0],[0,-0.5,0.5,0],[0,0,0,0]],
          "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})";
  CHECK(max_abs(parse_operator_text(text) - singlet_projector().matrix()) < 1e-15);
}

TEST_CASE("parse Pauli form") {
  const std::string text = R"({"pauli": [[0.25,0,0,0],[0,-0.25,0,0],[0,0,-0.25,0],[0,0,0,-0.25]]})";
  CHECK(max_abs(parse_operator_text(text) - singlet_projector().matrix()) < 1e-15);
}

TEST_CASE("round trip through JSON") {
  Rng rng = stream(71, 0);
  for (int k = 0; k < 50; ++k) {
    const HermitianOp w = HermitianOp::checked(testing::random_hermitian(rng));
    CHECK(max_abs(parse_operator_matrix(operator_to_json(w)) - w.matrix()) == 0.0);
    const PauliTensor omega = from_hermitian(w);
    CHECK(max_abs(from_hermitian(parse_operator_matrix(pauli_to_json(omega))).omega - omega.omega) < 1e-14);
    // Serialized text parses back exactly.
    CHECK(max_abs(parse_operator_text(operator_to_json(w).dump()) - w.matrix()) == 0.0);
  }
}

TEST_CASE("parse errors") {
  CHECK(parse_kind("{not json") == ErrorKind::ParseError);
  CHECK(parse_kind("[1,2,3]") == ErrorKind::ParseError);
  CHECK(parse_kind("{}") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"re": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"pauli": [[1,0,0],[0,1,0],[0,0,1]]})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"pauli": [[1,0,0,"x"],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})") == ErrorKind::ParseError);
  CHECK(parse_kind(R"({"pauli": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                       "re": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                       "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})") == ErrorKind::ParseError);
  CHECK_THROWS_AS(load_operator_matrix("/nonexistent/file.json"), Error);
}

TEST_CASE("format_double round-trips") {
  Rng rng = stream(72, 0);
  std::normal_distribution<double> n(0.0, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double v = n(rng);
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}
