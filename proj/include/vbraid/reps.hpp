#ifndef VBRAID_REPS_HPP
#define VBRAID_REPS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/freegroup.hpp"
#include "vbraid/laurent.hpp"
#include "vbraid/lpmatrix.hpp"
#include "vbraid/perm.hpp"
#include "vbraid/word.hpp"

// Representations of the virtual braid group and its relatives.
//
// Evaluation convention: the leftmost letter of a word acts first. For a word
// l1 l2 ... lk every representation returns rho(lk) o ... o rho(l1):
//
//   burau(w)     = B(lk) * ... * B(l1)          (matrices act on columns)
//   aut_rep(w)   = A(lk) o ... o A(l1)          (aut_compose order)
//   perm_proj(w) = T(lk) o ... o T(l1)          (p_compose order)
//
// so rho(u v) = rho(v) o rho(u). This is the order in which the matrices
// B(sigma_i), B(xi_i) and the automorphisms A(sigma_i), A(xi_i) satisfy the
// braid-permutation relation s_i s_{i+1} xi_i = xi_{i+1} s_i s_{i+1}; the
// opposite order breaks it.

namespace vbraid {

namespace detail {

  inline void require_classical_or_virtual(GroupWord const& w, char const* what) {
    if (w.flavor() == Flavor::SB || w.flavor() == Flavor::SG) {
      throw FlavorError(std::string(what) + " is not defined on "
                        + std::string(flavor_name(w.flavor()))
                        + " words (no image of the singular generators a_i)");
    }
  }

  inline void require_strands(GroupWord const& w, std::size_t n) {
    if (w.strands() != n) {
      throw DimensionMismatch("word lives on " + std::to_string(w.strands())
                              + " strands, not " + std::to_string(n));
    }
  }

  // 2x2 blocks placed at rows/columns (i-1, i).
  struct Block {
    LaurentPoly a, b, c, d;
  };

  inline Block const& sigma_block() {
    static Block const blk{1 - LaurentPoly::t(), LaurentPoly::t(), 1, 0};
    return blk;
  }

  inline Block const& sigma_inverse_block() {
    static Block const blk = [] {
      auto const& s   = sigma_block();
      LPMatrix    inv = mat_inverse(LPMatrix{{s.a, s.b}, {s.c, s.d}});
      return Block{inv(0, 0), inv(0, 1), inv(1, 0), inv(1, 1)};
    }();
    return blk;
  }

  inline Block const& zeta_block_matrix() {
    static Block const blk{0, 1, 1, 0};
    return blk;
  }

  inline Block const& burau_block(Letter const& l) {
    if (l.kind == LetterKind::Zeta) {
      return zeta_block_matrix();
    }
    return l.exponent > 0 ? sigma_block() : sigma_inverse_block();
  }

  // m <- G(l) * m, touching only rows i-1 and i.
  inline void left_multiply_generator(LPMatrix& m, Letter const& l) {
    Block const&      g  = burau_block(l);
    std::size_t const r0 = static_cast<std::size_t>(l.index - 1);
    std::size_t const r1 = r0 + 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
      LaurentPoly const top = m(r0, j);
      LaurentPoly const bot = m(r1, j);
      m(r0, j)              = g.a * top + g.b * bot;
      m(r1, j)              = g.c * top + g.d * bot;
    }
  }

}  // namespace detail

/// Full n x n Burau matrix of one letter: identity padding around the 2x2
/// block at position (i, i+1).
inline LPMatrix burau_generator(Letter const& l, std::size_t n) {
  if (l.kind == LetterKind::A) {
    throw FlavorError("no Burau image of the singular generator a_i");
  }
  if (l.index < 1 || static_cast<std::size_t>(l.index) + 1 > n) {
    throw IndexOutOfRange("generator index " + std::to_string(l.index)
                          + " out of range for n = " + std::to_string(n));
  }
  auto const& g = detail::burau_block(l);
  LPMatrix    block{{g.a, g.b}, {g.c, g.d}};
  auto const  i = static_cast<std::size_t>(l.index);
  return block_diag(block_diag(LPMatrix::identity(i - 1), block),
                    LPMatrix::identity(n - i - 1));
}

/// VB word -> BP word, zeta_i -> xi_i, sigma_i -> sigma_i.
inline GroupWord to_bp(GroupWord const& w) {
  if (w.flavor() != Flavor::VB) {
    throw FlavorError("to_bp expects a VB word, got "
                      + std::string(flavor_name(w.flavor())));
  }
  return w.recast(Flavor::BP, w.strands());
}

/// Burau matrix of a Br, Sym, VB or BP word.
inline LPMatrix burau(GroupWord const& w) {
  detail::require_classical_or_virtual(w, "the Burau representation");
  LPMatrix m = LPMatrix::identity(w.strands());
  for (auto const& l : w.letters()) {
    detail::left_multiply_generator(m, l);
  }
  return m;
}

inline LPMatrix burau(GroupWord const& w, std::size_t n) {
  detail::require_strands(w, n);
  return burau(w);
}

/// Automorphism of F_n attached to one letter.
inline FreeAut aut_generator(Letter const& l, std::size_t n) {
  if (l.kind == LetterKind::A) {
    throw FlavorError("no automorphism attached to the singular generator a_i");
  }
  if (l.index < 1 || static_cast<std::size_t>(l.index) + 1 > n) {
    throw IndexOutOfRange("generator index " + std::to_string(l.index)
                          + " out of range for n = " + std::to_string(n));
  }
  int const             i      = l.index;
  std::vector<FreeWord> images = FreeAut::identity(n).images();
  auto&                 xi     = images[static_cast<std::size_t>(i - 1)];
  auto&                 xi1    = images[static_cast<std::size_t>(i)];
  if (l.kind == LetterKind::Zeta) {
    xi  = FreeWord::generator(i + 1);
    xi1 = FreeWord::generator(i);
  } else if (l.exponent > 0) {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    xi  = FreeWord::generator(i + 1);
    xi1 = FreeWord({{i + 1, -1}, {i, 1}, {i + 1, 1}});
  } else {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    xi  = FreeWord({{i, 1}, {i + 1, 1}, {i, -1}});
    xi1 = FreeWord::generator(i);
  }
  return FreeAut(n, std::move(images));
}

inline FreeAut aut_rep(GroupWord const& w) {
  detail::require_classical_or_virtual(w, "the Aut F_n representation");
  FreeAut r = FreeAut::identity(w.strands());
  for (auto const& l : w.letters()) {
    r = aut_compose(aut_generator(l, w.strands()), r);
  }
  return r;
}

inline FreeAut aut_rep(GroupWord const& w, std::size_t n) {
  detail::require_strands(w, n);
  return aut_rep(w);
}

/// Every sigma_i and zeta_i maps to the transposition (i i+1).
inline Permutation perm_proj(GroupWord const& w) {
  detail::require_classical_or_virtual(w, "the permutation projection");
  Permutation r = Permutation::identity(w.strands());
  for (auto const& l : w.letters()) {
    r = p_compose(p_transposition(l.index, w.strands()), r);
  }
  return r;
}

/// Signed count of sigma letters.
inline int64_t exp_sum(GroupWord const& w) {
  int64_t s = 0;
  for (auto const& l : w.letters()) {
    if (l.kind == LetterKind::Sigma) {
      s += l.exponent;
    }
  }
  return s;
}

/// Image in Z/2 + Z.
struct AbelianImage {
  int     zeta_parity = 0;
  int64_t sigma_sum   = 0;

  friend bool operator==(AbelianImage const&, AbelianImage const&) = default;
};

inline AbelianImage ab_add(AbelianImage const& x, AbelianImage const& y) {
  return {(x.zeta_parity + y.zeta_parity) % 2, x.sigma_sum + y.sigma_sum};
}

inline AbelianImage abelianize(GroupWord const& w) {
  if (w.flavor() != Flavor::VB && w.flavor() != Flavor::BP) {
    throw FlavorError("abelianize expects a VB or BP word, got "
                      + std::string(flavor_name(w.flavor())));
  }
  return {zeta_count(w) % 2, exp_sum(w)};
}

}  // namespace vbraid

#endif  // VBRAID_REPS_HPP
