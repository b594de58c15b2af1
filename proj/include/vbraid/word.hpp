#ifndef VBRAID_WORD_HPP
#define VBRAID_WORD_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vbraid/error.hpp"

namespace vbraid {

/// Which presentation a word lives in.
///
///   Br   classical braid group, sigma letters only
///   Sym  symmetric group, zeta letters only
///   VB   virtual braid group, sigma and zeta
///   BP   braid-permutation group, sigma and xi (written with the zeta letter)
///   SB   singular braid monoid, sigma^{+-1} and a (a not invertible)
///   SG   singular braid group, sigma and a, both invertible
enum class Flavor { Br, Sym, VB, BP, SB, SG };

inline constexpr Flavor kAllFlavors[] = {Flavor::Br, Flavor::Sym, Flavor::VB,
                                         Flavor::BP, Flavor::SB,  Flavor::SG};

inline std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Br: return "Br";
    case Flavor::Sym: return "Sym";
    case Flavor::VB: return "VB";
    case Flavor::BP: return "BP";
    case Flavor::SB: return "SB";
    case Flavor::SG: return "SG";
  }
  return "?";
}

inline Flavor parse_flavor(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Flavor f : kAllFlavors) {
    std::string name(flavor_name(f));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == lower) {
      return f;
    }
  }
  throw FlavorError("unknown flavor '" + std::string(text) + "'");
}

inline bool is_monoid(Flavor f) { return f == Flavor::SB; }

enum class LetterKind : std::uint8_t { Sigma, Zeta, A };

inline char letter_char(LetterKind k) {
  switch (k) {
    case LetterKind::Sigma: return 's';
    case LetterKind::Zeta: return 'z';
    case LetterKind::A: return 'a';
  }
  return '?';
}

inline bool flavor_allows(Flavor f, LetterKind k) {
  switch (f) {
    case Flavor::Br: return k == LetterKind::Sigma;
    case Flavor::Sym: return k == LetterKind::Zeta;
    case Flavor::VB:
    case Flavor::BP: return k != LetterKind::A;
    case Flavor::SB:
    case Flavor::SG: return k != LetterKind::Zeta;
  }
  return false;
}

struct Letter {
  LetterKind kind     = LetterKind::Sigma;
  int        index    = 1;
  int        exponent = 1;

  static Letter sigma(int i, int e = 1) { return {LetterKind::Sigma, i, e}; }
  static Letter zeta(int i) { return {LetterKind::Zeta, i, 1}; }
  static Letter a(int i, int e = 1) { return {LetterKind::A, i, e}; }

  /// zeta is its own inverse.
  Letter inverse() const {
    return kind == LetterKind::Zeta ? *this : Letter{kind, index, -exponent};
  }

  /// True when `*this` followed by `o` cancels freely.
  bool cancels_with(Letter const& o) const {
    if (kind != o.kind || index != o.index) {
      return false;
    }
    return kind == LetterKind::Zeta || exponent == -o.exponent;
  }

  std::uint32_t code() const {
    return (static_cast<std::uint32_t>(index) << 3)
           | (static_cast<std::uint32_t>(kind) << 1) | (exponent < 0 ? 1u : 0u);
  }

  friend bool operator==(Letter const&, Letter const&) = default;
};

inline std::string to_string(Letter const& l) {
  std::string out(1, letter_char(l.kind));
  out += std::to_string(l.index);
  if (l.exponent < 0) {
    out += "^-1";
  }
  return out;
}

/// A word over the generators of one flavored presentation on n strands.
///
/// Construction validates indices (1 <= i <= n-1) and letter kinds against
/// the flavor, normalizes zeta^-1 to zeta, and rejects a^-1 in SB.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(Flavor flavor, std::size_t n, std::vector<Letter> letters = {})
      : flavor_(flavor), n_(n), letters_(std::move(letters)) {
    for (auto& l : letters_) {
      validate(l);
    }
  }

  Flavor flavor() const noexcept { return flavor_; }
  std::size_t strands() const noexcept { return n_; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter const& operator[](std::size_t k) const { return letters_[k]; }

  void push_back(Letter l) {
    validate(l);
    letters_.push_back(l);
  }

  /// Same letters, reinterpreted in another flavor and/or on more strands.
  GroupWord recast(Flavor flavor, std::size_t n) const {
    return GroupWord(flavor, n, letters_);
  }

  friend bool operator==(GroupWord const&, GroupWord const&) = default;

 private:
  void validate(Letter& l) const {
    if (!flavor_allows(flavor_, l.kind)) {
      throw LetterNotAllowedInFlavor("letter " + to_string(l) + " is not allowed in "
                                     + std::string(flavor_name(flavor_)));
    }
    if (l.index < 1 || static_cast<std::size_t>(l.index) + 1 > n_) {
      throw IndexOutOfRange("letter " + to_string(l) + " needs index in 1.."
                            + std::to_string(n_ == 0 ? 0 : n_ - 1) + " for n = "
                            + std::to_string(n_));
    }
    if (l.exponent != 1 && l.exponent != -1) {
      throw DomainError("letter exponents must be +1 or -1");
    }
    if (l.kind == LetterKind::Zeta) {
      l.exponent = 1;
    }
    if (l.kind == LetterKind::A && l.exponent < 0 && is_monoid(flavor_)) {
      throw InverseNotAllowedInMonoid("a" + std::to_string(l.index)
                                      + "^-1 does not exist in the monoid SB");
    }
  }

  Flavor              flavor_ = Flavor::VB;
  std::size_t         n_      = 0;
  std::vector<Letter> letters_;
};

/// "s1 s2^-1 z1"; the empty word prints as "".
inline std::string to_string(GroupWord const& w) {
  std::string out;
  for (auto const& l : w.letters()) {
    if (!out.empty()) {
      out += " ";
    }
    out += to_string(l);
  }
  return out;
}

/// Parses whitespace-separated letters: kind index ("^-1")?, kind one of s z a.
inline GroupWord parse_word(std::string_view text, Flavor flavor, std::size_t n) {
  GroupWord   w(flavor, n);
  std::size_t pos = 0;
  auto        at_space = [&] {
    return pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]));
  };
  while (true) {
    while (at_space()) {
      ++pos;
    }
    if (pos >= text.size()) {
      break;
    }
    std::size_t const start = pos;
    Letter            l;
    switch (text[pos]) {
      case 's': l.kind = LetterKind::Sigma; break;
      case 'z': l.kind = LetterKind::Zeta; break;
      case 'a': l.kind = LetterKind::A; break;
      default:
        throw SyntaxError(pos, std::string("expected letter kind 's', 'z' or 'a', found '")
                                   + text[pos] + "'");
    }
    ++pos;
    std::size_t const digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == digits) {
      throw SyntaxError(pos, "expected a positive index");
    }
    std::string_view const num = text.substr(digits, pos - digits);
    if (num.size() > 9) {
      throw SyntaxError(digits, "index too large");
    }
    l.index = std::stoi(std::string(num));
    if (l.index == 0) {
      throw SyntaxError(digits, "index must be positive");
    }
    if (text.substr(pos, 3) == "^-1") {
      l.exponent = -1;
      pos += 3;
    } else if (pos < text.size() && text[pos] == '^') {
      throw SyntaxError(pos, "only the exponent ^-1 is supported");
    }
    if (pos < text.size() && !at_space()) {
      throw SyntaxError(pos, std::string("unexpected character '") + text[pos]
                                 + "' after letter starting at position "
                                 + std::to_string(start));
    }
    w.push_back(l);
  }
  return w;
}

/// Cancels adjacent s^e s^-e, z z, and (in SG) a^e a^-e until none remain.
inline GroupWord free_reduce(GroupWord const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (auto const& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels_with(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return GroupWord(w.flavor(), w.strands(), std::move(stack));
}

/// Reversed word with exponents flipped. Throws for SB words containing a
/// singular generator.
inline GroupWord invert_word(GroupWord const& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (is_monoid(w.flavor()) && it->kind == LetterKind::A) {
      throw MonoidHasNoInverses("a" + std::to_string(it->index)
                                + " has no inverse in the monoid SB");
    }
    out.push_back(it->inverse());
  }
  return GroupWord(w.flavor(), w.strands(), std::move(out));
}

inline void require_compatible(GroupWord const& u, GroupWord const& v) {
  if (u.flavor() != v.flavor()) {
    throw FlavorError("flavor mismatch: " + std::string(flavor_name(u.flavor()))
                      + " vs " + std::string(flavor_name(v.flavor())));
  }
  if (u.strands() != v.strands()) {
    throw DimensionMismatch("strand count mismatch: " + std::to_string(u.strands())
                            + " vs " + std::to_string(v.strands()));
  }
}

/// Plain concatenation u.v (no reduction).
inline GroupWord concat(GroupWord const& u, GroupWord const& v) {
  require_compatible(u, v);
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return GroupWord(u.flavor(), u.strands(), std::move(letters));
}

inline GroupWord operator*(GroupWord const& u, GroupWord const& v) { return concat(u, v); }

inline int zeta_count(GroupWord const& w) {
  return static_cast<int>(std::count_if(w.letters().begin(), w.letters().end(),
                                        [](Letter const& l) {
                                          return l.kind == LetterKind::Zeta;
                                        }));
}

}  // namespace vbraid

#endif  // VBRAID_WORD_HPP
