// Burau matrix, determinant and closure of s1^3 on two strands.
#include <iostream>

#include "vbraid/vbraid.hpp"

int main() {
  using namespace vbraid;
  GroupWord const w = parse_word("s1 s1 s1", Flavor::VB, 2);
  LPMatrix const  b = burau(w);
  std::cout << "burau:\n" << to_string(b) << "\n";
  std::cout << "det: " << mat_det(b) << "\n";
  std::cout << "perm: " << to_cycle_string(perm_proj(w)) << "\n";
  std::cout << "gauss: " << to_string(closure_code(w)) << "\n";
}
