// Knuth-Bendix completion of a presentation file under shortlex.
//
//   kb_probe abab.pres

#include <iostream>

#include "monorel/monorel.hpp"

int main(int argc, char** argv) {
  using namespace monorel;
  if (argc != 2) {
    std::cerr << "usage: kb_probe FILE\n";
    return 2;
  }
  auto pres = io::read_presentation_file(argv[1]);
  auto report = knuth_bendix(pres, ReductionOrder::shortlex(pres.alphabet()));
  std::cout << to_string(report.outcome) << "\n";
  for (const auto& r : report.rules) std::cout << "  " << to_string(r) << "\n";
  return report.outcome == CompletionReport::Outcome::Completed ? 0 : 1;
}
