// Moves sigma_1 past a block of virtual crossings and asks the rewriting
// search for a derivation.
#include <iostream>

#include "vbraid/vbraid.hpp"

int main() {
  using namespace vbraid;
  GroupWord const w1 = parse_word("s1", Flavor::VB, 2);
  GroupWord const w2 = GroupWord(Flavor::VB, 1, {});
  std::cout << "aut check: " << std::boolalpha << check_naturality(2, 1, w1, w2) << "\n";

  BfsResult const r = naturality_by_search(w1, w2);
  RewriteSystem const sys = rewrite_system(Flavor::VB, 3);
  std::cout << "search: " << (r.equal() ? "equal" : "unknown") << " in "
            << r.witness.size() << " steps\n";
  GroupWord w = naturality_conjugate(w1, w2);
  std::cout << "  " << to_string(w) << "\n";
  for (auto const& s : r.witness) {
    w = apply_step(sys, w, s);
    std::cout << describe_step(sys, s) << "\n  " << (w.empty() ? "1" : to_string(w)) << "\n";
  }
}
