#include <catch_amalgamated.hpp>

#include "random_words.hpp"
#include "vbraid/json.hpp"

using namespace vbraid;

TEST_CASE("polynomial encoding") {
  LaurentPoly const p = 1 - LaurentPoly::t();
  CHECK(json::encode(p).dump() == R"({"0":"1","1":"-1"})");
  CHECK(json::decode_poly(json::encode(p)) == p);
  CHECK_THROWS_AS(json::decode_poly(json::Json::parse(R"({"x":"1"})")), ParseError);
  CHECK_THROWS_AS(json::decode_poly(json::Json::parse(R"({"1":2})")), ParseError);
}

TEST_CASE("matrix round trip") {
  testing::Rng rng(41);
  for (std::size_t n = 0; n <= 4; ++n) {
    LPMatrix const m = testing::random_matrix(n, rng);
    CHECK(json::decode_matrix(json::Json::parse(json::encode(m).dump())) == m);
  }
}

TEST_CASE("permutation encoding") {
  CHECK(json::encode(Permutation({2, 3, 1})).dump()
        == R"j({"images":[2,3,1],"cycles":"(1 2 3)"})j");
}
