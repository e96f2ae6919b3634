#include <doctest.h>

#include "galilei/io.hpp"

using namespace galilei;
using nlohmann::json;

namespace {

ExtensionParams params(long k, long m, long l) { return {Rational(k), Rational(m), Rational(l)}; }

json galilei_file(const std::string& n1n2) {
  return json::parse(R"({
    "basis": ["E", "H", "P1", "P2", "N1", "N2", "M"],
    "params": {"k": "1/2", "m": "2", "l": "3"},
    "brackets": [
      {"left": "N1", "right": "H", "result": {"P1": "1"}},
      {"left": "N2", "right": "H", "result": {"P2": "1"}},
      {"left": "N1", "right": "N2", "result": {"E": ")" + n1n2 + R"("}},
      {"left": "M", "right": "P1", "result": {"P2": "1"}},
      {"left": "M", "right": "P2", "result": {"P1": "-1"}},
      {"left": "N1", "right": "P1", "result": {"E": "m"}},
      {"left": "N2", "right": "P2", "result": {"E": "m"}},
      {"left": "M", "right": "N1", "result": {"N2": "1"}},
      {"left": "M", "right": "N2", "result": {"N1": "-1"}},
      {"left": "M", "right": "H", "result": {"E": "l"}}
    ]
  })");
}

}  // namespace

TEST_CASE("coefficient expressions") {
  const ExtensionParams p{Rational(1, 2), Rational(2), Rational(3)};
  CHECK(evaluate_coefficient("7/3", p) == Rational(7, 3));
  CHECK(evaluate_coefficient("k", p) == Rational(1, 2));
  CHECK(evaluate_coefficient("-m", p) == Rational(-2));
  CHECK(evaluate_coefficient("-1/2*l", p) == Rational(-3, 2));
  CHECK_THROWS_AS(evaluate_coefficient("q", p), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_coefficient("2*q", p), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_coefficient("1/0", p), std::invalid_argument);
}

TEST_CASE("algebra file reproduces the built-in algebra") {
  const LoadedAlgebra loaded = algebra_from_json(galilei_file("k"));
  CHECK(loaded.params == ExtensionParams{Rational(1, 2), Rational(2), Rational(3)});
  CHECK(loaded.jacobi_defect.is_zero());
  CHECK(algebras_equal(loaded.algebra, make_galilei_algebra(loaded.params)));
}

TEST_CASE("dump and reload round trip") {
  const ExtensionParams p = params(-3, 5, 7);
  const LieAlgebra g = make_galilei_algebra(p);
  const LoadedAlgebra back = algebra_from_json(algebra_to_json(g, p));
  CHECK(algebras_equal(back.algebra, g));
  CHECK(back.params == p);
}

TEST_CASE("malformed algebra files") {
  CHECK_THROWS_AS(algebra_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"basis": ["A", 3]})")), std::invalid_argument);
  CHECK_THROWS_AS(
      algebra_from_json(json::parse(R"({"basis": ["A"], "brackets": [{"left": "A", "right": "B", "result": {}}]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(
                      R"({"basis": ["A"], "brackets": [{"left": "A", "right": "A", "result": {"A": "1"}}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"basis": ["A", "B"], "brackets": [
      {"left": "A", "right": "B", "result": {"A": "1"}},
      {"left": "A", "right": "B", "result": {"A": "2"}}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"basis": ["A", "B"], "brackets": [
      {"left": "A", "right": "B", "result": {"A": "1"}},
      {"left": "B", "right": "A", "result": {"A": "1"}}]})")),
                  std::invalid_argument);
  // A consistent reverse entry is accepted.
  CHECK_NOTHROW(algebra_from_json(json::parse(R"({"basis": ["A", "B"], "brackets": [
      {"left": "A", "right": "B", "result": {"A": "1"}},
      {"left": "B", "right": "A", "result": {"A": "-1"}}]})")));
}

TEST_CASE("a broken bracket shows up as a Jacobi defect") {
  // [N1, H] = P1, [N1, N2] = P1 instead of k E: [[N1, N2], M] no longer balances.
  json j = galilei_file("k");
  j["brackets"][2]["result"] = json{{"P1", "1"}};
  const LoadedAlgebra loaded = algebra_from_json(j);
  CHECK_FALSE(loaded.jacobi_defect.is_zero());
}
