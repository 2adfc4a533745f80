#pragma once

#include <utility>
#include <vector>

#include "monorel/words.hpp"

namespace monorel {

struct Equation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Mon<A : l_i = r_i>. Equations are unordered pairs; the stored orientation
/// only fixes the meaning of "direction" in equality certificates.
class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<Equation> equations)
      : alphabet_(std::move(alphabet)), equations_(std::move(equations)) {
    for (const auto& eq : equations_) {
      alphabet_.require(eq.lhs);
      alphabet_.require(eq.rhs);
    }
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Equation>& equations() const noexcept {
    return equations_;
  }

  /// Longest side over all equations; the "relator length" used to size
  /// search slack.
  std::size_t max_side_length() const noexcept {
    std::size_t n = 0;
    for (const auto& eq : equations_)
      n = std::max({n, eq.lhs.size(), eq.rhs.size()});
    return n;
  }

 private:
  Alphabet alphabet_;
  std::vector<Equation> equations_;
};

}  // namespace monorel
