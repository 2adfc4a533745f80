// Builds the complete system for one member of the family and normalizes
// the words given on the command line (default: a few words over a, b).
//
//   normal_forms 1 2 2 2 abab^2ab "a(bab)^2a^2(bab)^2"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "monorel/monorel.hpp"

int main(int argc, char** argv) {
  using namespace monorel;
  int e[4] = {1, 2, 2, 2};
  int arg = 1;
  if (argc >= 5) {
    for (int i = 0; i < 4; ++i) e[i] = std::atoi(argv[1 + i]);
    arg = 5;
  }
  auto cls = family::classify(e[0], e[1], e[2], e[3]);
  auto cert = family::certify(cls);
  const RewritingSystem& sys = cert.system;

  std::cout << family::to_string(cls.tag.variant) << ", "
            << to_string(sys.certification()) << "\n";
  for (const auto& r : sys.rules()) std::cout << "  " << to_string(r) << "\n";

  std::vector<std::string> words(argv + arg, argv + argc);
  if (words.empty()) words = {"ab^2a^2b^2", "b^3", "a^2b^2ab^2a^3b^2ab^2"};
  for (const auto& text : words) {
    Word w = parse_word(text, sys.alphabet());
    std::cout << print_word(w) << " -> " << print_word(reduce(sys, w)) << "\n";
  }
}
