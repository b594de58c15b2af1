#include <catch_amalgamated.hpp>

#include "vbraid/perm.hpp"

using namespace vbraid;

TEST_CASE("construction validates images") {
  CHECK_NOTHROW(Permutation({2, 3, 1}));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
}

TEST_CASE("composition applies the right factor first") {
  Permutation const f({2, 3, 1});
  Permutation const g = p_transposition(1, 3);
  // (f o g)(1) = f(2) = 3
  CHECK(p_compose(f, g)(1) == 3);
  CHECK(p_compose(g, f)(1) == 1);
  CHECK(p_compose(f, f.inverse()).is_identity());
}

TEST_CASE("transpositions") {
  CHECK(p_transposition(2, 4).images() == std::vector<int>{1, 3, 2, 4});
  CHECK_THROWS_AS(p_transposition(4, 4), IndexOutOfRange);
  CHECK_THROWS_AS(p_transposition(0, 4), IndexOutOfRange);
}

TEST_CASE("cycle test and text forms") {
  CHECK(p_is_cycle(Permutation({2, 3, 1})));
  CHECK_FALSE(p_is_cycle(Permutation({2, 1, 3})));
  CHECK(p_is_cycle(Permutation::identity(1)));
  CHECK(to_image_string(Permutation({2, 3, 1})) == "[2,3,1]");
  CHECK(to_cycle_string(Permutation({2, 3, 1})) == "(1 2 3)");
  CHECK(to_cycle_string(Permutation({2, 1, 4, 3})) == "(1 2)(3 4)");
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
}
