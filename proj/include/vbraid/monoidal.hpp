#ifndef VBRAID_MONOIDAL_HPP
#define VBRAID_MONOIDAL_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/reps.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

/// Raises every index by m and widens the word to strands() + m.
inline GroupWord shift(GroupWord const& w, std::size_t m) {
  std::vector<Letter> letters = w.letters();
  for (auto& l : letters) {
    l.index += static_cast<int>(m);
  }
  return GroupWord(w.flavor(), w.strands() + m, std::move(letters));
}

/// Juxtaposition of an m-strand word and an n-strand word: w1 on the left
/// strands, w2 shifted onto the right n strands.
inline GroupWord mu(GroupWord const& w1, GroupWord const& w2) {
  if (w1.flavor() != w2.flavor()) {
    throw FlavorError("cannot pair words of different flavors");
  }
  std::size_t const m = w1.strands();
  GroupWord         r = w1.recast(w1.flavor(), m + w2.strands());
  GroupWord const   tail = shift(w2, m);
  for (auto const& l : tail.letters()) {
    r.push_back(l);
  }
  return r;
}

namespace detail {

  // Runs k = 1..n, run k descending from m+k-1 to k.
  inline std::vector<Letter> block_letters(std::size_t m, std::size_t n, LetterKind kind) {
    std::vector<Letter> out;
    out.reserve(m * n);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t j = m + k - 1; j >= k && j > 0; --j) {
        out.push_back(Letter{kind, static_cast<int>(j), 1});
      }
    }
    return out;
  }

}  // namespace detail

/// zeta_m ... zeta_1  zeta_{m+1} ... zeta_2  ...  zeta_{n+m-1} ... zeta_n
/// in VB_{m+n}: the block transposition of the first m strands past the next n.
inline GroupWord zeta_block(std::size_t m, std::size_t n) {
  return GroupWord(Flavor::VB, m + n, detail::block_letters(m, n, LetterKind::Zeta));
}

/// The same index pattern with sigma letters, in Br_{m+n}.
inline GroupWord sigma_block(std::size_t m, std::size_t n) {
  return GroupWord(Flavor::Br, m + n, detail::block_letters(m, n, LetterKind::Sigma));
}

/// Left-hand side of the naturality square: zeta_{m,n}^-1 mu(w1, w2) zeta_{m,n}.
inline GroupWord naturality_conjugate(GroupWord const& w1, GroupWord const& w2) {
  std::size_t const m   = w1.strands();
  std::size_t const n   = w2.strands();
  GroupWord const   z   = zeta_block(m, n).recast(w1.flavor(), m + n);
  return invert_word(z) * mu(w1, w2) * z;
}

/// Naturality of the symmetry under the Aut F_n representation:
/// aut_rep(zeta_{m,n}^-1 mu(w1,w2) zeta_{m,n}) == aut_rep(mu(w2,w1)).
inline bool check_naturality(std::size_t m, std::size_t n, GroupWord const& w1,
                             GroupWord const& w2) {
  if (w1.strands() != m || w2.strands() != n) {
    throw DimensionMismatch("check_naturality: words do not live on m and n strands");
  }
  if (w1.flavor() != w2.flavor()) {
    throw FlavorError("check_naturality: flavors differ");
  }
  return aut_rep(naturality_conjugate(w1, w2)) == aut_rep(mu(w2, w1));
}

/// The same square decided by rewriting in the presentation itself.
inline BfsResult naturality_by_search(GroupWord const& w1, GroupWord const& w2,
                                      BfsOptions const& opt = {}) {
  return bfs_equal(naturality_conjugate(w1, w2), mu(w2, w1), opt);
}

// Commutation normal form (Cartier-Foata): letters whose indices differ by
// more than one commute in every presentation here, so two words related only
// by such swaps have the same normal form.
inline std::vector<std::vector<Letter>> foata_normal_form(GroupWord const& w) {
  std::vector<std::vector<Letter>> layers;
  auto const commute = [](Letter const& a, Letter const& b) {
    return a.index - b.index > 1 || b.index - a.index > 1;
  };
  for (auto const& l : w.letters()) {
    // Deepest layer the letter can sink to without crossing a non-commuting letter.
    std::size_t target = layers.size();
    while (target > 0
           && std::all_of(layers[target - 1].begin(), layers[target - 1].end(),
                          [&](Letter const& x) { return commute(x, l); })) {
      --target;
    }
    if (target == layers.size()) {
      layers.emplace_back();
    }
    layers[target].push_back(l);
  }
  for (auto& layer : layers) {
    std::sort(layer.begin(), layer.end(), [](Letter const& a, Letter const& b) {
      return a.code() < b.code();
    });
  }
  return layers;
}

inline bool equal_up_to_far_commutation(GroupWord const& u, GroupWord const& v) {
  return u.flavor() == v.flavor() && u.strands() == v.strands()
         && foata_normal_form(u) == foata_normal_form(v);
}

/// Both sides of the two coherence identities for the symmetry zeta.
///
///   B1: zeta_{m,n} . shift(zeta_{m,q}, n)  =  zeta_{m,n+q}
///   B2: shift(zeta_{n,q}, m) . zeta_{m,q}  =  zeta_{m+n,q}
struct CoherenceSides {
  GroupWord b1_lhs, b1_rhs, b2_lhs, b2_rhs;
};

inline CoherenceSides coherence_sides(std::size_t m, std::size_t n, std::size_t q) {
  std::size_t const total = m + n + q;
  auto const        widen = [&](GroupWord const& w) { return w.recast(Flavor::VB, total); };
  return {
      widen(zeta_block(m, n)) * widen(shift(zeta_block(m, q), n)),
      widen(zeta_block(m, n + q)),
      widen(shift(zeta_block(n, q), m)) * widen(zeta_block(m, q)),
      widen(zeta_block(m + n, q)),
  };
}

struct CoherenceReport {
  bool b1_literal;
  bool b2_literal;
  bool b1_up_to_commutation;
  bool b2_up_to_commutation;
};

inline CoherenceReport coherence_report(std::size_t m, std::size_t n, std::size_t q) {
  auto const s = coherence_sides(m, n, q);
  return {s.b1_lhs == s.b1_rhs, s.b2_lhs == s.b2_rhs,
          equal_up_to_far_commutation(s.b1_lhs, s.b1_rhs),
          equal_up_to_far_commutation(s.b2_lhs, s.b2_rhs)};
}

/// True iff B1 and B2 hold letter for letter, with no rewriting at all.
///
/// B1 always does. B2 holds literally only when m = 0, n = 0 or q <= 1;
/// otherwise the two sides differ by swaps of far-apart zetas (see
/// coherence_report).
inline bool check_coherence(std::size_t m, std::size_t n, std::size_t q) {
  auto const r = coherence_report(m, n, q);
  return r.b1_literal && r.b2_literal;
}

}  // namespace vbraid

#endif  // VBRAID_MONOIDAL_HPP
