#include <catch_amalgamated.hpp>

#include "vbraid/freegroup.hpp"

using namespace vbraid;

namespace {
FreeWord word(std::vector<FreeLetter> ls) { return FreeWord(std::move(ls)); }
}

TEST_CASE("words stay freely reduced") {
  FreeWord w = word({{1, 1}, {2, 1}, {2, -1}, {1, -1}});
  CHECK(w.empty());
  FreeWord u = word({{1, 1}, {2, -1}});
  CHECK(fw_concat(u, u.inverse()).empty());
  CHECK(to_string(u) == "x1 x2^-1");
}

TEST_CASE("automorphism application and composition") {
  // f: x1 -> x2, x2 -> x2^-1 x1 x2
  FreeAut f(2, {word({{2, 1}}), word({{2, -1}, {1, 1}, {2, 1}})});
  // g: x1 -> x1 x2 x1^-1, x2 -> x1
  FreeAut g(2, {word({{1, 1}, {2, 1}, {1, -1}}), word({{1, 1}})});
  CHECK(aut_compose(f, g).is_identity());
  CHECK(aut_compose(g, f).is_identity());
  CHECK(aut_apply(f, word({{1, 1}, {2, 1}})) == word({{2, 1}, {2, -1}, {1, 1}, {2, 1}}));
}

TEST_CASE("images must fit the rank") {
  CHECK_THROWS_AS(FreeAut(2, {word({{3, 1}}), word({{1, 1}})}), DomainError);
  CHECK_THROWS_AS(FreeAut(2, {word({{1, 1}})}), DomainError);
}
