#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "random_words.hpp"
#include "vbraid/monoidal.hpp"

using namespace vbraid;

TEST_CASE("block words") {
  CHECK(to_string(zeta_block(1, 1)) == "z1");
  CHECK(to_string(zeta_block(2, 1)) == "z2 z1");
  CHECK(to_string(sigma_block(2, 1)) == "s2 s1");
  CHECK(zeta_block(0, 3).empty());
  CHECK(zeta_block(3, 0).empty());
  CHECK(zeta_block(0, 3).strands() == 3);
}

TEST_CASE("block letters follow the grid") {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      GroupWord const  z = zeta_block(m, n);
      std::vector<int> got;
      for (auto const& l : z.letters()) {
        got.push_back(l.index);
      }
      CHECK(got == oracle::block_indices(m, n));
    }
  }
}

TEST_CASE("blocks permute the strands as a block transposition") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      // Strand at position p <= m moves to p + n; the rest move up by m.
      std::vector<int> images(m + n);
      for (std::size_t p = 1; p <= m + n; ++p) {
        images[p - 1] = static_cast<int>(p <= m ? p + n : p - m);
      }
      CHECK(perm_proj(zeta_block(m, n)).images() == images);
      CHECK(perm_proj(sigma_block(m, n)).images() == images);
    }
  }
}

TEST_CASE("mu shifts the right factor") {
  auto const w1 = parse_word("s1", Flavor::VB, 2);
  auto const w2 = parse_word("z1 s2^-1", Flavor::VB, 3);
  auto const p  = mu(w1, w2);
  CHECK(p.strands() == 5);
  CHECK(to_string(p) == "s1 z3 s4^-1");
  CHECK(burau(p) == block_diag(burau(w1), burau(w2)));
}

TEST_CASE("naturality on generators") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      GroupWord const e1(Flavor::VB, m);
      GroupWord const e2(Flavor::VB, n);
      CHECK(check_naturality(m, n, e1, e2));
      for (int i = 1; i < static_cast<int>(n); ++i) {
        CHECK(check_naturality(m, n, e1, GroupWord(Flavor::VB, n, {Letter::sigma(i)})));
      }
      for (int i = 1; i < static_cast<int>(m); ++i) {
        CHECK(check_naturality(m, n, GroupWord(Flavor::VB, m, {Letter::zeta(i)}), e2));
      }
    }
  }
}

TEST_CASE("naturality fails when the factors are not swapped") {
  auto const w1 = parse_word("s1", Flavor::VB, 2);
  GroupWord const e(Flavor::VB, 1);
  CHECK(aut_rep(naturality_conjugate(w1, e)) != aut_rep(mu(w1, e)));
}

TEST_CASE("naturality by rewriting") {
  auto const w1 = parse_word("s1", Flavor::VB, 2);
  GroupWord const e(Flavor::VB, 1);
  auto const r = naturality_by_search(w1, e);
  CHECK(r.equal());
}

TEST_CASE("far commutation normal form") {
  auto const u = parse_word("s1 z3 s2", Flavor::VB, 4);
  auto const v = parse_word("z3 s1 s2", Flavor::VB, 4);
  auto const x = parse_word("s1 s2 z3", Flavor::VB, 4);
  CHECK(equal_up_to_far_commutation(u, v));
  CHECK_FALSE(equal_up_to_far_commutation(u, x));
}

TEST_CASE("coherence: B1 holds letter for letter") {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t q = 0; q <= 4; ++q) {
        auto const r = coherence_report(m, n, q);
        CHECK(r.b1_literal);
        CHECK(r.b2_up_to_commutation);
      }
    }
  }
}

TEST_CASE("coherence: B2 is literal only in degenerate cases") {
  CHECK(check_coherence(1, 1, 1));
  CHECK(check_coherence(2, 0, 3));
  CHECK(check_coherence(3, 2, 1));
  CHECK_FALSE(coherence_report(1, 1, 2).b2_literal);
  CHECK_FALSE(check_coherence(3, 2, 2));
}
