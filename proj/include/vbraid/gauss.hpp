#ifndef VBRAID_GAUSS_HPP
#define VBRAID_GAUSS_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/perm.hpp"
#include "vbraid/reps.hpp"
#include "vbraid/word.hpp"

namespace vbraid {

enum class Passage { Over, Under };

struct GaussVisit {
  Passage passage;
  int     label;

  friend bool operator==(GaussVisit const&, GaussVisit const&) = default;
};

/// Unsigned Gauss code: every crossing label 1..k occurs exactly twice, once
/// Over and once Under, and labels are numbered in order of first visit.
class GaussCode {
 public:
  GaussCode() = default;

  /// Relabels in first-visit order and validates the O/U pairing.
  explicit GaussCode(std::vector<GaussVisit> visits) : visits_(std::move(visits)) {
    std::map<int, int> relabel;
    std::map<int, int> overs, unders;
    for (auto& v : visits_) {
      auto [it, fresh] = relabel.try_emplace(v.label, static_cast<int>(relabel.size()) + 1);
      (v.passage == Passage::Over ? overs : unders)[it->second] += 1;
      v.label = it->second;
    }
    for (auto const& [old_label, label] : relabel) {
      if (overs[label] != 1 || unders[label] != 1) {
        throw LabelCountError("crossing " + std::to_string(old_label) + " has "
                              + std::to_string(overs[label]) + " Over and "
                              + std::to_string(unders[label])
                              + " Under visits; expected one of each");
      }
    }
  }

  std::vector<GaussVisit> const& visits() const noexcept { return visits_; }
  std::size_t crossings() const noexcept { return visits_.size() / 2; }
  bool empty() const noexcept { return visits_.empty(); }

  friend bool operator==(GaussCode const&, GaussCode const&) = default;

 private:
  std::vector<GaussVisit> visits_;
};

/// "O1U2O3U1O2U3"
inline std::string to_string(GaussCode const& c) {
  std::string out;
  for (auto const& v : c.visits()) {
    out += v.passage == Passage::Over ? 'O' : 'U';
    out += std::to_string(v.label);
  }
  return out;
}

inline GaussCode parse_gauss(std::string_view text) {
  std::vector<GaussVisit> visits;
  std::size_t             pos = 0;
  while (pos < text.size()) {
    char const c = text[pos];
    if (c != 'O' && c != 'U') {
      throw SyntaxError(pos, std::string("expected 'O' or 'U', found '") + c + "'");
    }
    ++pos;
    std::size_t const digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == digits) {
      throw SyntaxError(pos, "expected a crossing label");
    }
    if (pos - digits > 9) {
      throw SyntaxError(digits, "crossing label too large");
    }
    int const label = std::stoi(std::string(text.substr(digits, pos - digits)));
    if (label == 0) {
      throw SyntaxError(digits, "crossing labels are positive");
    }
    visits.push_back({c == 'O' ? Passage::Over : Passage::Under, label});
  }
  return GaussCode(std::move(visits));
}

/// True when some cyclic rotation of `a`, relabelled, equals `b`.
inline bool equal_up_to_rotation(GaussCode const& a, GaussCode const& b) {
  auto const& va = a.visits();
  if (va.size() != b.visits().size()) {
    return false;
  }
  if (va.empty()) {
    return true;
  }
  for (std::size_t r = 0; r < va.size(); ++r) {
    std::vector<GaussVisit> rotated(va.begin() + static_cast<std::ptrdiff_t>(r), va.end());
    rotated.insert(rotated.end(), va.begin(), va.begin() + static_cast<std::ptrdiff_t>(r));
    if (GaussCode(std::move(rotated)) == b) {
      return true;
    }
  }
  return false;
}

/// Gauss code of the closure of a VB (or Br) word on n strands.
///
/// The traversal starts at the top of strand position 1 and follows the
/// strand down through the letters in word order, wrapping from the bottom of
/// a position to the top of the same position, until it returns. At a
/// classical crossing sigma_i the strand entering at position i passes Over
/// and the one entering at i+1 passes Under; sigma_i^-1 swaps the roles.
/// Virtual crossings are passed through without being recorded.
inline GaussCode closure_code(GroupWord const& w) {
  if (w.flavor() != Flavor::VB && w.flavor() != Flavor::Br) {
    throw FlavorError("closure_code expects a VB or Br word, got "
                      + std::string(flavor_name(w.flavor())));
  }
  std::size_t const n = w.strands();
  if (n == 0 || !p_is_cycle(perm_proj(w))) {
    throw NotAKnot("the closure of '" + to_string(w) + "' on " + std::to_string(n)
                   + " strands has more than one component");
  }
  std::vector<GaussVisit> visits;
  int                     position = 1;
  do {
    for (std::size_t k = 0; k < w.length(); ++k) {
      Letter const& l = w[k];
      if (position != l.index && position != l.index + 1) {
        continue;
      }
      bool const from_left = position == l.index;
      if (l.kind == LetterKind::Sigma) {
        bool const over = (l.exponent > 0) == from_left;
        visits.push_back({over ? Passage::Over : Passage::Under, static_cast<int>(k) + 1});
      }
      position = from_left ? l.index + 1 : l.index;
    }
  } while (position != 1);
  return GaussCode(std::move(visits));
}

inline GaussCode closure_code(GroupWord const& w, std::size_t n) {
  if (w.strands() != n) {
    throw DimensionMismatch("word lives on " + std::to_string(w.strands())
                            + " strands, not " + std::to_string(n));
  }
  return closure_code(w);
}

}  // namespace vbraid

#endif  // VBRAID_GAUSS_HPP
