#pragma once

// Rules, rewriting systems, leftmost reduction to normal form, and
// termination certificates by weighted shortlex orders.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monorel/words.hpp"

namespace monorel {

inline constexpr std::size_t kDefaultFuel = 1'000'000;

class FuelExhausted : public Error {
 public:
  FuelExhausted(std::size_t steps, const Word& last)
      : Error("normalization fuel exhausted after " + std::to_string(steps) +
              " steps"),
        steps_(steps),
        last_(last) {}
  std::size_t steps() const noexcept { return steps_; }
  const Word& last_word() const noexcept { return last_; }

 private:
  std::size_t steps_;
  Word last_;
};

struct Rule {
  Word lhs;
  Word rhs;

  Rule(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.empty()) throw Error("rule with empty left-hand side");
    if (lhs == rhs) throw Error("rule " + print_word(lhs) + " -> itself");
  }

  friend bool operator==(const Rule&, const Rule&) = default;
};

inline std::string to_string(const Rule& rule) {
  return print_word(rule.lhs) + " -> " + print_word(rule.rhs);
}

/// Weighted shortlex: compare total weight, then length, then the leftmost
/// differing letter by precedence.
class ReductionOrder {
 public:
  /// `precedence` lists letters greatest first, e.g. "xba" for x > b > a.
  ReductionOrder(const Alphabet& alphabet, std::vector<unsigned> weights,
                 std::string_view precedence)
      : alphabet_(alphabet),
        weights_(std::move(weights)),
        precedence_(precedence) {
    if (weights_.size() != alphabet_.size())
      throw Error("weight table does not cover the alphabet");
    for (unsigned w : weights_)
      if (w == 0) throw Error("letter weights must be positive");
    std::string sorted_prec(precedence_), sorted_alpha(alphabet_.letters());
    std::sort(sorted_prec.begin(), sorted_prec.end());
    std::sort(sorted_alpha.begin(), sorted_alpha.end());
    if (sorted_prec != sorted_alpha)
      throw Error("precedence must list every alphabet letter exactly once");
    weight_of_.fill(0);
    rank_of_.fill(0);
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
      weight_of_[static_cast<unsigned char>(alphabet_[i])] = weights_[i];
    for (std::size_t i = 0; i < precedence_.size(); ++i)
      rank_of_[static_cast<unsigned char>(precedence_[i])] =
          static_cast<unsigned>(precedence_.size() - i);
  }

  /// All weights 1, precedence = declaration order (first letter greatest).
  static ReductionOrder shortlex(const Alphabet& alphabet) {
    return ReductionOrder(alphabet, std::vector<unsigned>(alphabet.size(), 1),
                          alphabet.letters());
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  const std::string& precedence() const noexcept { return precedence_; }

  unsigned weight(Letter c) const {
    unsigned w = weight_of_[static_cast<unsigned char>(c)];
    if (w == 0)
      throw Error(std::string("letter '") + c + "' missing from weight table");
    return w;
  }
  std::uint64_t weight(const Word& w) const {
    std::uint64_t total = 0;
    for (Letter c : w) total += weight(c);
    return total;
  }

  std::strong_ordering compare(const Word& u, const Word& v) const {
    if (auto c = weight(u) <=> weight(v); c != 0) return c;
    if (auto c = u.size() <=> v.size(); c != 0) return c;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != v[i])
        return rank_of_[static_cast<unsigned char>(u[i])] <=>
               rank_of_[static_cast<unsigned char>(v[i])];
    return std::strong_ordering::equal;
  }

  friend bool operator==(const ReductionOrder& a, const ReductionOrder& b) {
    return a.alphabet_ == b.alphabet_ && a.weights_ == b.weights_ &&
           a.precedence_ == b.precedence_;
  }

 private:
  Alphabet alphabet_;
  std::vector<unsigned> weights_;
  std::string precedence_;
  std::array<unsigned, 256> weight_of_{};
  std::array<unsigned, 256> rank_of_{};
};

inline std::strong_ordering compare(const ReductionOrder& order, const Word& u,
                                    const Word& v) {
  return order.compare(u, v);
}

/// `weights: a=4 b=1 x=2; precedence: x>b>a`
inline std::string to_string(const ReductionOrder& order) {
  std::string out = "weights:";
  for (std::size_t i = 0; i < order.alphabet().size(); ++i)
    out += std::string(" ") + order.alphabet()[i] + "=" +
           std::to_string(order.weights()[i]);
  out += "; precedence: ";
  for (std::size_t i = 0; i < order.precedence().size(); ++i) {
    if (i) out += '>';
    out += order.precedence()[i];
  }
  return out;
}

enum class Certification { Uncertified, LocallyConfluent, Terminating, Complete };

inline const char* to_string(Certification c) {
  switch (c) {
    case Certification::Uncertified: return "uncertified";
    case Certification::LocallyConfluent: return "locally-confluent";
    case Certification::Terminating: return "terminating";
    case Certification::Complete: return "complete";
  }
  return "?";
}

class RewritingSystem;

namespace detail {
// Only the certifying operations may set certification state.
struct CertificationAccess {
  static void set_order(RewritingSystem& s, ReductionOrder order);
  static void set_confluent(RewritingSystem& s);
};
}  // namespace detail

class RewritingSystem {
 public:
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
      : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    std::unordered_set<std::string> seen;
    for (const Rule& r : rules_) {
      alphabet_.require(r.lhs);
      alphabet_.require(r.rhs);
      if (!seen.insert(r.lhs.str() + '\n' + r.rhs.str()).second)
        throw Error("duplicate rule " + to_string(r));
      max_lhs_ = std::max(max_lhs_, r.lhs.size());
    }
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  const Rule& operator[](std::size_t i) const { return rules_[i]; }
  std::size_t max_lhs_length() const noexcept { return max_lhs_; }

  Certification certification() const noexcept {
    if (order_ && confluent_) return Certification::Complete;
    if (order_) return Certification::Terminating;
    if (confluent_) return Certification::LocallyConfluent;
    return Certification::Uncertified;
  }
  const std::optional<ReductionOrder>& termination_order() const noexcept {
    return order_;
  }
  bool confluence_verified() const noexcept { return confluent_; }

  /// Index of the first rule whose lhs occurs in w at pos, lowest index
  /// first; npos if none.
  std::size_t rule_at(const Word& w, std::size_t pos) const noexcept {
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (w.occurs_at(pos, rules_[i].lhs)) return i;
    return npos;
  }

  bool is_irreducible(const Word& w) const noexcept {
    return std::none_of(rules_.begin(), rules_.end(),
                        [&](const Rule& r) { return w.contains(r.lhs); });
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend struct detail::CertificationAccess;

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::size_t max_lhs_ = 0;
  std::optional<ReductionOrder> order_;
  bool confluent_ = false;
};

namespace detail {
inline void CertificationAccess::set_order(RewritingSystem& s,
                                           ReductionOrder order) {
  s.order_ = std::move(order);
}
inline void CertificationAccess::set_confluent(RewritingSystem& s) {
  s.confluent_ = true;
}
}  // namespace detail

struct RewriteStep {
  std::size_t rule;
  std::size_t position;
  Word result;
};

struct ReductionTrace {
  std::vector<RewriteStep> steps;
};

/// One rule application at the leftmost matching position; lowest rule
/// index breaks ties. Absent when w is a normal form.
inline std::optional<RewriteStep> rewrite_step(const RewritingSystem& system,
                                               const Word& w,
                                               std::size_t from = 0) {
  for (std::size_t pos = from; pos < w.size(); ++pos) {
    std::size_t i = system.rule_at(w, pos);
    if (i != RewritingSystem::npos) {
      const Rule& r = system[i];
      return RewriteStep{i, pos, w.splice(pos, r.lhs.size(), r.rhs)};
    }
  }
  return std::nullopt;
}

struct NormalForm {
  Word word;
  ReductionTrace trace;
  std::size_t steps = 0;
};

namespace detail {

template <bool kRecord>
NormalForm reduce(const RewritingSystem& system, Word w, std::size_t fuel) {
  NormalForm out;
  std::size_t from = 0;
  const std::size_t back = system.max_lhs_length();
  for (;;) {
    auto step = rewrite_step(system, w, from);
    if (!step) break;
    if (out.steps == fuel) throw FuelExhausted(out.steps, w);
    ++out.steps;
    // No match started before `position`; after the splice only matches
    // reaching into the replaced segment can be new.
    from = step->position + 1 > back ? step->position + 1 - back : 0;
    w = std::move(step->result);
    if constexpr (kRecord)
      out.trace.steps.push_back({step->rule, step->position, w});
  }
  out.word = std::move(w);
  return out;
}

}  // namespace detail

/// Reduces w to normal form by repeated rewrite_step, recording the trace.
/// Throws FuelExhausted when more than `fuel` steps would be needed.
inline NormalForm normal_form(const RewritingSystem& system, const Word& w,
                              std::size_t fuel = kDefaultFuel) {
  if (fuel == 0) throw Error("normal_form: fuel must be at least 1");
  return detail::reduce<true>(system, w, fuel);
}

/// normal_form without the trace.
inline Word reduce(const RewritingSystem& system, const Word& w,
                   std::size_t fuel = kDefaultFuel) {
  return detail::reduce<false>(system, w, fuel).word;
}

struct TerminationReport {
  bool certified = false;
  std::optional<std::size_t> failing_rule;
  /// Copy of the input; carries the order when certified.
  RewritingSystem system;
};

/// Succeeds iff every rule strictly decreases under `order`. Weighted
/// shortlex is compatible with concatenation, so rule-wise descent rules out
/// infinite derivations.
inline TerminationReport verify_termination(const RewritingSystem& system,
                                            const ReductionOrder& order) {
  TerminationReport report{false, std::nullopt, system};
  for (Letter c : system.alphabet()) (void)order.weight(c);
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (order.compare(system[i].lhs, system[i].rhs) !=
        std::strong_ordering::greater) {
      report.failing_rule = i;
      return report;
    }
  }
  report.certified = true;
  detail::CertificationAccess::set_order(report.system, order);
  return report;
}

/// Per-letter upper bounds for find_termination_order; letters absent from
/// `caps` use the uniform max weight.
struct WeightCaps {
  unsigned max_weight = 8;
  std::vector<std::pair<Letter, unsigned>> per_letter;

  unsigned cap(Letter c) const {
    for (auto [l, w] : per_letter)
      if (l == c) return w;
    return max_weight;
  }
};

/// Exhaustive search over weight vectors (by increasing total weight, then
/// lexicographically) and precedence permutations (declaration order
/// first). Returns the first order under which every rule decreases.
inline std::optional<ReductionOrder> find_termination_order(
    const RewritingSystem& system, const WeightCaps& caps) {
  const Alphabet& alphabet = system.alphabet();
  const std::size_t n = alphabet.size();
  if (caps.max_weight == 0) throw Error("max weight must be at least 1");
  std::vector<unsigned> cap(n);
  for (std::size_t i = 0; i < n; ++i) cap[i] = caps.cap(alphabet[i]);

  // Letter-count vectors of each rule; a weight vector is admissible only
  // if every rule is weight-non-increasing.
  std::vector<std::vector<long>> delta(system.size(), std::vector<long>(n));
  for (std::size_t r = 0; r < system.size(); ++r)
    for (std::size_t i = 0; i < n; ++i)
      delta[r][i] = static_cast<long>(system[r].lhs.count(alphabet[i])) -
                    static_cast<long>(system[r].rhs.count(alphabet[i]));

  std::vector<std::string> precedences;
  {
    // Permutations of declaration indices, lexicographic.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::string p;
      for (auto i : idx) p += alphabet[i];
      precedences.push_back(std::move(p));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }

  const unsigned max_total =
      std::accumulate(cap.begin(), cap.end(), 0u);
  std::vector<unsigned> w(n);
  // Enumerate vectors with sum == total, each entry in [1, cap].
  auto visit = [&](auto& self, std::size_t i,
                   unsigned remaining) -> std::optional<ReductionOrder> {
    if (i + 1 == n) {
      if (remaining < 1 || remaining > cap[i]) return std::nullopt;
      w[i] = remaining;
      for (const auto& d : delta) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j)
          s += d[j] * static_cast<long>(w[j]);
        if (s < 0) return std::nullopt;
      }
      for (const auto& prec : precedences) {
        ReductionOrder order(alphabet, w, prec);
        bool ok = std::all_of(
            system.rules().begin(), system.rules().end(), [&](const Rule& r) {
              return order.compare(r.lhs, r.rhs) ==
                     std::strong_ordering::greater;
            });
        if (ok) return order;
      }
      return std::nullopt;
    }
    for (unsigned v = 1; v <= cap[i] && v < remaining; ++v) {
      w[i] = v;
      if (auto found = self(self, i + 1, remaining - v)) return found;
    }
    return std::nullopt;
  };
  for (unsigned total = static_cast<unsigned>(n); total <= max_total;
       ++total)
    if (auto found = visit(visit, 0, total)) return found;
  return std::nullopt;
}

inline std::optional<ReductionOrder> find_termination_order(
    const RewritingSystem& system, unsigned max_weight = 8) {
  return find_termination_order(system, WeightCaps{max_weight, {}});
}

}  // namespace monorel
