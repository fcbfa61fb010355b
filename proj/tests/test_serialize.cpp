#include "doctest.h"
#include "maschke/certify.hpp"
#include "maschke/serialize.hpp"
#include "test_support.hpp"

using namespace maschke;

TEST_CASE("field elements serialize as 8 canonical strings") {
  auto j = to_json((FieldElement(1) - FieldElement::i()) * Rational(1, 2));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 8);
  CHECK(j[0] == "1/2");
  CHECK(j[1] == "-1/2");
  CHECK(j[2] == "0/1");
  CHECK_THROWS(field_from_json(nlohmann::json::array({"1/2"})));
}

TEST_CASE("round trips are exact") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    FieldElement x = maschke::testing::random_element(rng);
    CHECK(field_from_json(to_json(x)) == x);
  }
  for (const auto& l : build_line_catalogue().all352) {
    auto j = to_json(l);
    CHECK(j.contains("span"));
    CHECK(line_from_json(nlohmann::json::parse(j.dump())) == l);
  }
}

TEST_CASE("line arrays are ordered independently of input order") {
  auto lines = build_line_catalogue().family96;
  auto sorted = lines_to_json(lines);
  std::mt19937_64 rng(1);
  std::shuffle(lines.begin(), lines.end(), rng);
  CHECK(lines_to_json(lines) == sorted);
  CHECK(sorted.size() == 96);
}
