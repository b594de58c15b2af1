#ifndef VBRAID_REWRITE_HPP
#define VBRAID_REWRITE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vbraid/error.hpp"
#include "vbraid/presentation.hpp"
#include "vbraid/word.hpp"

// Bounded bidirectional breadth-first search for equality of words in a
// finitely presented group or monoid.
//
// The rewrite graph has one edge per (rule, direction, position) where the
// source side of the rule occurs. Rules are, in order: the presentation's
// relators; for group flavors the inverted relators (l^-1 = r^-1); and free
// cancellation g g^-1 = 1, g^-1 g = 1 for every invertible generator that the
// relators do not already cover. Every edge is reversible by flipping its
// direction, so a path found from both ends replays exactly.
//
// The search is a semi-decision: Unknown never claims inequality.

namespace vbraid {

struct RewriteRule {
  GroupWord   lhs;
  GroupWord   rhs;
  std::string origin;  // relator id, "inverse of <id>" or "cancel <letter>"
};

struct RewriteSystem {
  Flavor                   flavor;
  std::size_t              n;
  std::vector<RewriteRule> rules;
};

/// One application of rules[rule] at `position`: lhs -> rhs when forward,
/// rhs -> lhs otherwise.
struct RewriteStep {
  std::size_t rule;
  bool        forward;
  std::size_t position;

  RewriteStep reversed() const { return {rule, !forward, position}; }
  friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
};

inline RewriteSystem rewrite_system(Flavor flavor, std::size_t n) {
  RewriteSystem sys{flavor, n, {}};
  if (n < 2) {
    return sys;
  }
  auto const same_rule = [](RewriteRule const& r, GroupWord const& l, GroupWord const& rr) {
    return (r.lhs == l && r.rhs == rr) || (r.lhs == rr && r.rhs == l);
  };
  auto const known = [&](GroupWord const& l, GroupWord const& r) {
    return std::any_of(sys.rules.begin(), sys.rules.end(),
                       [&](RewriteRule const& x) { return same_rule(x, l, r); });
  };
  Presentation const pres = relators(flavor, n);
  for (auto const& rel : pres.relators) {
    sys.rules.push_back({rel.lhs, rel.rhs, rel.id});
  }
  if (!is_monoid(flavor)) {
    for (auto const& rel : pres.relators) {
      GroupWord l = invert_word(rel.lhs);
      GroupWord r = invert_word(rel.rhs);
      if (!known(l, r)) {
        sys.rules.push_back({std::move(l), std::move(r), "inverse of " + rel.id});
      }
    }
  }
  std::vector<LetterKind> invertible;
  if (flavor_allows(flavor, LetterKind::Sigma)) {
    invertible.push_back(LetterKind::Sigma);
  }
  if (flavor == Flavor::SG) {
    invertible.push_back(LetterKind::A);
  }
  for (LetterKind kind : invertible) {
    for (int i = 1; static_cast<std::size_t>(i) < n; ++i) {
      Letter const g{kind, i, 1};
      for (auto pair : {std::pair{g, g.inverse()}, std::pair{g.inverse(), g}}) {
        GroupWord l(flavor, n, {pair.first, pair.second});
        GroupWord e(flavor, n);
        if (!known(l, e)) {
          sys.rules.push_back({std::move(l), std::move(e),
                               "cancel " + to_string(pair.first) + " "
                                   + to_string(pair.second)});
        }
      }
    }
  }
  return sys;
}

/// Applies one step; throws DomainError when the step does not match.
inline GroupWord apply_step(RewriteSystem const& sys, GroupWord const& w,
                            RewriteStep const& s) {
  if (s.rule >= sys.rules.size()) {
    throw DomainError("rewrite step names unknown rule " + std::to_string(s.rule));
  }
  auto const& rule = sys.rules[s.rule];
  auto const& from = s.forward ? rule.lhs.letters() : rule.rhs.letters();
  auto const& to   = s.forward ? rule.rhs.letters() : rule.lhs.letters();
  auto const& ls   = w.letters();
  if (s.position + from.size() > ls.size()
      || !std::equal(from.begin(), from.end(),
                     ls.begin() + static_cast<std::ptrdiff_t>(s.position))) {
    throw DomainError("rewrite step does not match at position "
                      + std::to_string(s.position));
  }
  std::vector<Letter> out(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(s.position));
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(s.position + from.size()),
             ls.end());
  return GroupWord(w.flavor(), w.strands(), std::move(out));
}

inline GroupWord replay(RewriteSystem const& sys, GroupWord w,
                        std::vector<RewriteStep> const& steps) {
  for (auto const& s : steps) {
    w = apply_step(sys, w, s);
  }
  return w;
}

/// "R3 -> at 2: s1 s2 s1 => s2 s1 s2"
inline std::string describe_step(RewriteSystem const& sys, RewriteStep const& s) {
  auto const& rule = sys.rules.at(s.rule);
  auto const& from = s.forward ? rule.lhs : rule.rhs;
  auto const& to   = s.forward ? rule.rhs : rule.lhs;
  auto const  show = [](GroupWord const& w) {
    return w.empty() ? std::string("1") : to_string(w);
  };
  return "rule " + std::to_string(s.rule) + (s.forward ? " ->" : " <-") + " at "
         + std::to_string(s.position) + ": " + show(from) + " => " + show(to) + "  ["
         + rule.origin + "]";
}

struct BfsOptions {
  int depth = 6;
  // Default: max(|w1|, |w2|) + 2 * depth.
  std::optional<std::size_t> length_cap;
  // Search gives up (Unknown) once this many words have been visited.
  std::size_t max_nodes = 4'000'000;
};

enum class BfsStatus { Equal, Unknown };

struct BfsResult {
  BfsStatus                status = BfsStatus::Unknown;
  std::vector<RewriteStep> witness;
  std::size_t              nodes_visited = 0;
  bool                     budget_exhausted = false;

  bool equal() const noexcept { return status == BfsStatus::Equal; }
};

namespace detail {

  using WordKey = std::u32string;

  inline WordKey encode(std::vector<Letter> const& letters) {
    WordKey k;
    k.reserve(letters.size());
    for (auto const& l : letters) {
      k.push_back(static_cast<char32_t>(l.code()));
    }
    return k;
  }

  struct SearchNode {
    WordKey     parent;
    RewriteStep step;
    bool        root;
  };

  using SearchMap = std::unordered_map<WordKey, SearchNode>;

  // Steps leading from the root of `map` to `key`.
  inline std::vector<RewriteStep> path_to(SearchMap const& map, WordKey key) {
    std::vector<RewriteStep> steps;
    while (true) {
      auto const& node = map.at(key);
      if (node.root) {
        break;
      }
      steps.push_back(node.step);
      key = node.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  }

}  // namespace detail

inline BfsResult bfs_equal(RewriteSystem const& sys, GroupWord const& w1,
                           GroupWord const& w2, BfsOptions const& opt = {}) {
  require_compatible(w1, w2);
  if (w1.flavor() != sys.flavor || w1.strands() != sys.n) {
    throw FlavorError("rewrite system does not match the words' presentation");
  }
  using detail::WordKey;
  BfsResult result;
  if (w1 == w2) {
    result.status = BfsStatus::Equal;
    return result;
  }
  std::size_t const cap = opt.length_cap.value_or(
      std::max(w1.length(), w2.length()) + 2 * static_cast<std::size_t>(std::max(opt.depth, 0)));

  std::vector<std::pair<WordKey, WordKey>> rules;  // (lhs, rhs)
  rules.reserve(sys.rules.size());
  for (auto const& r : sys.rules) {
    rules.emplace_back(detail::encode(r.lhs.letters()), detail::encode(r.rhs.letters()));
  }

  WordKey const     start = detail::encode(w1.letters());
  WordKey const     goal  = detail::encode(w2.letters());
  detail::SearchMap fwd, bwd;
  fwd.emplace(start, detail::SearchNode{{}, {}, true});
  bwd.emplace(goal, detail::SearchNode{{}, {}, true});
  std::vector<WordKey> fwd_frontier{start}, bwd_frontier{goal};
  int                  fwd_depth = 0, bwd_depth = 0;
  result.nodes_visited = 2;

  auto finish = [&](WordKey const& meet) {
    result.status       = BfsStatus::Equal;
    result.witness      = detail::path_to(fwd, meet);
    auto back           = detail::path_to(bwd, meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      result.witness.push_back(it->reversed());
    }
    return result;
  };

  while (fwd_depth + bwd_depth < opt.depth) {
    bool const forward_side = fwd_frontier.size() <= bwd_frontier.size();
    auto&      frontier     = forward_side ? fwd_frontier : bwd_frontier;
    auto&      mine         = forward_side ? fwd : bwd;
    auto&      other        = forward_side ? bwd : fwd;
    std::vector<WordKey> next;
    for (auto const& word : frontier) {
      for (std::size_t r = 0; r < rules.size(); ++r) {
        for (bool dir : {true, false}) {
          WordKey const& from = dir ? rules[r].first : rules[r].second;
          WordKey const& to   = dir ? rules[r].second : rules[r].first;
          if (from.size() > word.size() || word.size() - from.size() + to.size() > cap) {
            continue;
          }
          for (std::size_t pos = 0; pos + from.size() <= word.size(); ++pos) {
            if (word.compare(pos, from.size(), from) != 0) {
              continue;
            }
            WordKey v = word.substr(0, pos);
            v += to;
            v.append(word, pos + from.size());
            auto [it, inserted] =
                mine.try_emplace(std::move(v), detail::SearchNode{word, {r, dir, pos}, false});
            if (!inserted) {
              continue;
            }
            ++result.nodes_visited;
            if (other.count(it->first) != 0) {
              return finish(it->first);
            }
            if (result.nodes_visited >= opt.max_nodes) {
              result.budget_exhausted = true;
              return result;
            }
            next.push_back(it->first);
          }
        }
      }
    }
    if (next.empty()) {
      break;
    }
    frontier = std::move(next);
    (forward_side ? fwd_depth : bwd_depth) += 1;
  }
  return result;
}

inline BfsResult bfs_equal(GroupWord const& w1, GroupWord const& w2,
                           BfsOptions const& opt = {}) {
  require_compatible(w1, w2);
  return bfs_equal(rewrite_system(w1.flavor(), w1.strands()), w1, w2, opt);
}

}  // namespace vbraid

#endif  // VBRAID_REWRITE_HPP
