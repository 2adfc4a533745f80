#pragma once

// Critical pairs, local confluence, and Knuth-Bendix completion for string
// rewriting systems.

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monorel/presentation.hpp"
#include "monorel/rewrite.hpp"
#include "monorel/words.hpp"

namespace monorel {

/// `source` rewrites to `left` by rule `first` at position 0 and to `right`
/// by rule `second` at `second_position`.
struct CriticalPair {
  Word source;
  Word left;
  Word right;
  std::size_t first;
  std::size_t second;
  Overlap overlap;
  std::size_t second_position;
};

namespace detail {

// Pairs between rule i (outer) and rule j (inner/right), appended to out.
inline void pairs_between(const RewritingSystem& system, std::size_t i,
                          std::size_t j, std::vector<CriticalPair>& out) {
  const Rule& r1 = system[i];
  const Rule& r2 = system[j];
  const Word& l1 = r1.lhs;
  const Word& l2 = r2.lhs;
  const std::size_t limit = std::min(l1.size(), l2.size());
  for (std::size_t t = 1; t < limit; ++t) {
    if (l1.view().substr(l1.size() - t) != l2.view().substr(0, t)) continue;
    Word tail = l2.substr(t);
    out.push_back({l1 + tail, r1.rhs + tail,
                   l1.prefix(l1.size() - t) + r2.rhs, i, j,
                   Overlap{Overlap::Kind::SuffixPrefix, t}, l1.size() - t});
  }
  if (i == j) return;
  // l2 inside l1; identical left-hand sides count once, from the lower index.
  if (l2.size() < l1.size() || (l1 == l2 && i < j)) {
    for (std::size_t pos : find_occurrences(l1, l2))
      out.push_back({l1, r1.rhs, l1.splice(pos, l2.size(), r2.rhs), i, j,
                     Overlap{Overlap::Kind::Containment, pos}, pos});
  }
}

}  // namespace detail

/// Every suffix-prefix overlap between ordered rule pairs (a rule with
/// itself included) and every containment of one lhs in another,
/// deduplicated by (source, {left, right}).
inline std::vector<CriticalPair> critical_pairs(const RewritingSystem& system) {
  std::vector<CriticalPair> raw;
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t j = 0; j < system.size(); ++j)
      detail::pairs_between(system, i, j, raw);
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::vector<CriticalPair> out;
  for (auto& cp : raw) {
    auto lo = std::min(cp.left.str(), cp.right.str());
    auto hi = std::max(cp.left.str(), cp.right.str());
    if (seen.emplace(cp.source.str(), lo, hi).second)
      out.push_back(std::move(cp));
  }
  return out;
}

struct ConfluenceWitness {
  CriticalPair pair;
  Word left_normal_form;
  Word right_normal_form;
};

struct LocalConfluenceReport {
  bool joinable = false;
  std::size_t pairs_checked = 0;
  std::optional<ConfluenceWitness> witness;
  /// Copy of the input with the confluence check recorded when joinable.
  RewritingSystem system;
};

/// Normalizes both reducts of every critical pair. Stops at the first pair
/// whose normal forms differ. Throws FuelExhausted from normalization.
inline LocalConfluenceReport check_local_confluence(
    const RewritingSystem& system, std::size_t fuel = kDefaultFuel) {
  LocalConfluenceReport report{false, 0, std::nullopt, system};
  for (auto& cp : critical_pairs(system)) {
    ++report.pairs_checked;
    Word l = reduce(system, cp.left, fuel);
    Word r = reduce(system, cp.right, fuel);
    if (l != r) {
      report.witness = ConfluenceWitness{std::move(cp), std::move(l),
                                         std::move(r)};
      return report;
    }
  }
  report.joinable = true;
  detail::CertificationAccess::set_confluent(report.system);
  return report;
}

inline bool is_length_non_increasing(const RewritingSystem& system) {
  return std::all_of(
      system.rules().begin(), system.rules().end(),
      [](const Rule& r) { return r.lhs.size() >= r.rhs.size(); });
}

struct CompletionLimits {
  std::size_t max_rules = 500;
  std::size_t max_steps = 100'000;
};

struct CompletionStats {
  std::size_t pairs_processed = 0;
  std::size_t rules_added = 0;
  std::size_t rules_removed = 0;
  std::size_t steps = 0;
};

struct CompletionReport {
  enum class Outcome { Completed, LimitExceeded, Unorientable };
  Outcome outcome = Outcome::LimitExceeded;
  /// Certified complete system when completed; otherwise the working rule
  /// set at the moment completion stopped.
  std::optional<RewritingSystem> system;
  std::vector<Rule> rules;
  std::optional<Equation> unorientable;
  CompletionStats stats;
};

inline const char* to_string(CompletionReport::Outcome o) {
  switch (o) {
    case CompletionReport::Outcome::Completed: return "completed";
    case CompletionReport::Outcome::LimitExceeded: return "limit-exceeded";
    case CompletionReport::Outcome::Unorientable: return "unorientable";
  }
  return "?";
}

namespace detail {

class Completion {
 public:
  Completion(const Presentation& presentation, const ReductionOrder& order,
             const CompletionLimits& limits)
      : alphabet_(presentation.alphabet()),
        order_(order),
        limits_(limits),
        sys_(alphabet_, {}) {
    for (const auto& eq : presentation.equations()) queue_.push_back(eq);
  }

  CompletionReport run() {
    for (;;) {
      while (!queue_.empty()) {
        if (++report_.stats.steps > limits_.max_steps) return stop();
        Equation eq = std::move(queue_.front());
        queue_.pop_front();
        ++report_.stats.pairs_processed;
        Word u = reduce(sys_, eq.lhs);
        Word v = reduce(sys_, eq.rhs);
        if (u == v) continue;
        auto c = order_.compare(u, v);
        if (c == std::strong_ordering::equal) {
          report_.outcome = CompletionReport::Outcome::Unorientable;
          report_.unorientable = Equation{u, v};
          return finish_without_system();
        }
        if (c == std::strong_ordering::less) std::swap(u, v);
        add_rule(Rule(std::move(u), std::move(v)));
        if (rules_.size() > limits_.max_rules) return stop();
      }
      // Queue drained: everything must now be joinable.
      bool clean = true;
      for (auto& cp : critical_pairs(sys_)) {
        if (reduce(sys_, cp.left) != reduce(sys_, cp.right)) {
          queue_.push_back({std::move(cp.left), std::move(cp.right)});
          clean = false;
        }
      }
      if (clean) return complete(sys_);
    }
  }

 private:
  void add_rule(Rule rule) {
    ++report_.stats.rules_added;
    std::vector<Rule> kept;
    kept.push_back(rule);
    for (auto& r : rules_) {
      if (r.lhs.contains(rule.lhs)) {
        ++report_.stats.rules_removed;
        queue_.push_back({r.lhs, r.rhs});
      } else {
        kept.push_back(std::move(r));
      }
    }
    // Keep insertion order stable: older rules first, the new rule last.
    std::rotate(kept.begin(), kept.begin() + 1, kept.end());
    rules_ = std::move(kept);
    // Right-hand sides are normalized against the new left-hand sides; a
    // rhs cannot reach its own lhs since rhs < lhs in the order.
    sys_ = RewritingSystem(alphabet_, rules_);
    for (auto& r : rules_) r = Rule(r.lhs, reduce(sys_, r.rhs));
    sys_ = RewritingSystem(alphabet_, rules_);
    const std::size_t fresh = rules_.size() - 1;
    std::vector<CriticalPair> pairs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      pairs_between(sys_, fresh, j, pairs);
      if (j != fresh) pairs_between(sys_, j, fresh, pairs);
    }
    for (auto& cp : pairs)
      if (cp.left != cp.right)
        queue_.push_back({std::move(cp.left), std::move(cp.right)});
  }

  CompletionReport stop() {
    report_.outcome = CompletionReport::Outcome::LimitExceeded;
    return finish_without_system();
  }

  CompletionReport finish_without_system() {
    report_.rules = rules_;
    report_.system = sys_;
    return std::move(report_);
  }

  CompletionReport complete(const RewritingSystem& sys) {
    auto term = verify_termination(sys, order_);
    if (!term.certified)
      throw Error("completion produced a rule not decreasing in the order");
    auto conf = check_local_confluence(term.system);
    if (!conf.joinable)
      throw Error("completion produced a non-confluent system");
    report_.outcome = CompletionReport::Outcome::Completed;
    report_.rules = rules_;
    report_.system = std::move(conf.system);
    return std::move(report_);
  }

  Alphabet alphabet_;
  ReductionOrder order_;
  CompletionLimits limits_;
  RewritingSystem sys_;
  std::vector<Rule> rules_;
  std::deque<Equation> queue_;
  CompletionReport report_;
};

}  // namespace detail

/// Knuth-Bendix completion: FIFO equation queue, orientation by `order`,
/// full inter-reduction after every added rule. A completed outcome has
/// passed verify_termination and check_local_confluence.
inline CompletionReport knuth_bendix(const Presentation& presentation,
                                     const ReductionOrder& order,
                                     const CompletionLimits& limits = {}) {
  if (limits.max_rules == 0 || limits.max_steps == 0)
    throw Error("completion limits must be positive");
  if (!(order.alphabet() == presentation.alphabet()))
    throw Error("order and presentation alphabets differ");
  return detail::Completion(presentation, order, limits).run();
}

}  // namespace monorel
