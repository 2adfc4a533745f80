#pragma once

// Bounded search over the relation graph of a presentation: equality
// certificates, and empirical Dehn and space functions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monorel/presentation.hpp"
#include "monorel/rewrite.hpp"
#include "monorel/words.hpp"

namespace monorel {

/// Forward replaces an occurrence of the equation's lhs by its rhs.
enum class Direction { Forward, Backward };

inline const char* to_string(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

struct Application {
  std::size_t equation;
  Direction direction;
  std::size_t position;

  friend bool operator==(const Application&, const Application&) = default;
};

/// x = chain[0] ~ chain[1] ~ ... ~ chain[d] = y.
struct EqualityCertificate {
  std::vector<Word> chain;
  std::vector<Application> applications;

  std::size_t d() const noexcept { return applications.size(); }
  std::size_t s() const noexcept {
    std::size_t m = 0;
    for (const auto& w : chain) m = std::max(m, w.size());
    return m;
  }
};

/// Applies `app` to w; absent when the pattern does not occur there.
inline std::optional<Word> apply(const Presentation& presentation,
                                 const Word& w, const Application& app) {
  if (app.equation >= presentation.equations().size()) return std::nullopt;
  const Equation& eq = presentation.equations()[app.equation];
  const Word& from = app.direction == Direction::Forward ? eq.lhs : eq.rhs;
  const Word& to = app.direction == Direction::Forward ? eq.rhs : eq.lhs;
  if (app.position > w.size() || !w.occurs_at(app.position, from))
    return std::nullopt;
  return w.splice(app.position, from.size(), to);
}

/// True iff replaying every application reproduces the chain exactly.
inline bool replay(const Presentation& presentation,
                   const EqualityCertificate& cert) {
  if (cert.chain.empty() || cert.chain.size() != cert.applications.size() + 1)
    return false;
  for (std::size_t i = 0; i < cert.applications.size(); ++i) {
    auto next = apply(presentation, cert.chain[i], cert.applications[i]);
    if (!next || *next != cert.chain[i + 1]) return false;
  }
  return true;
}

namespace detail {

/// Calls f(next, application) for every word one relation application away
/// from w whose length does not exceed `bound`.
template <class F>
void for_each_neighbor(const Presentation& presentation, const Word& w,
                       std::size_t bound, F&& f) {
  const auto& eqs = presentation.equations();
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      const Word& from = dir == Direction::Forward ? eqs[e].lhs : eqs[e].rhs;
      const Word& to = dir == Direction::Forward ? eqs[e].rhs : eqs[e].lhs;
      if (w.size() - from.size() + to.size() > bound) continue;
      if (from.empty()) {
        for (std::size_t pos = 0; pos <= w.size(); ++pos)
          f(w.splice(pos, 0, to), Application{e, dir, pos});
        continue;
      }
      const std::string& h = w.str();
      for (auto pos = h.find(from.str()); pos != std::string::npos;
           pos = h.find(from.str(), pos + 1))
        f(w.splice(pos, from.size(), to), Application{e, dir, pos});
    }
  }
}

struct SearchNode {
  Word word;
  std::uint32_t parent;
  Application via;  // applied to parent's word yields this word
};

class SearchTree {
 public:
  static constexpr std::uint32_t kRoot = static_cast<std::uint32_t>(-1);

  explicit SearchTree(const Word& root) { add(root, kRoot, {}); }

  std::optional<std::uint32_t> find(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::uint32_t add(const Word& w, std::uint32_t parent, Application via) {
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({w, parent, via});
    index_.emplace(w, id);
    return id;
  }
  const SearchNode& operator[](std::uint32_t id) const { return nodes_[id]; }
  SearchNode& operator[](std::uint32_t id) { return nodes_[id]; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Root-to-node certificate.
  EqualityCertificate path_to(std::uint32_t id) const {
    EqualityCertificate cert;
    for (auto at = id; at != kRoot; at = nodes_[at].parent) {
      cert.chain.push_back(nodes_[at].word);
      if (nodes_[at].parent != kRoot)
        cert.applications.push_back(nodes_[at].via);
    }
    std::reverse(cert.chain.begin(), cert.chain.end());
    std::reverse(cert.applications.begin(), cert.applications.end());
    return cert;
  }

 private:
  std::vector<SearchNode> nodes_;
  std::unordered_map<Word, std::uint32_t> index_;
};

inline Application inverse(Application a) {
  a.direction = a.direction == Direction::Forward ? Direction::Backward
                                                  : Direction::Forward;
  return a;
}

/// x ... z (from tree a) followed by z ... y (reverse of tree b's path).
inline EqualityCertificate join(const SearchTree& a, std::uint32_t za,
                                const SearchTree& b, std::uint32_t zb) {
  EqualityCertificate cert = a.path_to(za);
  for (auto at = zb; b[at].parent != SearchTree::kRoot; at = b[at].parent) {
    cert.applications.push_back(inverse(b[at].via));
    cert.chain.push_back(b[b[at].parent].word);
  }
  return cert;
}

}  // namespace detail

enum class OracleVerdict { Equal, UnequalWithinBound, Inconclusive };

inline const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Equal: return "equal";
    case OracleVerdict::UnequalWithinBound: return "unequal-within-bound";
    case OracleVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// MinSteps: the certificate has the fewest relation applications among
/// derivations inside the bound. MinSpace: the certificate has the smallest
/// maximal word length.
enum class SearchMode { MinSteps, MinSpace };

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

struct OracleOptions {
  std::size_t node_budget = kDefaultNodeBudget;
  SearchMode mode = SearchMode::MinSteps;
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  std::optional<EqualityCertificate> certificate;
  std::size_t nodes = 0;
};

namespace detail {

inline OracleResult bidirectional_bfs(const Presentation& presentation,
                                      const Word& x, const Word& y,
                                      std::size_t bound, std::size_t budget) {
  OracleResult result;
  SearchTree from_x(x), from_y(y);
  std::vector<std::uint32_t> front_x{0}, front_y{0};
  while (!front_x.empty() && !front_y.empty()) {
    const bool grow_x = front_x.size() <= front_y.size();
    SearchTree& tree = grow_x ? from_x : from_y;
    const SearchTree& other = grow_x ? from_y : from_x;
    std::vector<std::uint32_t>& front = grow_x ? front_x : front_y;

    // A whole layer is expanded before stopping, so the best meeting found
    // in it has minimal total length.
    std::vector<std::uint32_t> next;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    std::size_t best_len = 0;
    for (std::uint32_t id : front) {
      const Word current = tree[id].word;
      bool over_budget = false;
      for_each_neighbor(presentation, current, bound,
                        [&](Word w, Application app) {
                          if (over_budget || tree.find(w)) return;
                          auto nid = tree.add(w, id, app);
                          next.push_back(nid);
                          if (tree.size() + other.size() > budget)
                            over_budget = true;
                          if (auto oid = other.find(w)) {
                            std::size_t len = tree.path_to(nid).d() +
                                              other.path_to(*oid).d();
                            if (!best || len < best_len) {
                              best = {nid, *oid};
                              best_len = len;
                            }
                          }
                        });
      if (over_budget && !best) {
        result.nodes = from_x.size() + from_y.size();
        return result;
      }
    }
    if (best) {
      result.verdict = OracleVerdict::Equal;
      result.certificate =
          grow_x ? join(from_x, best->first, from_y, best->second)
                 : join(from_x, best->second, from_y, best->first);
      result.nodes = from_x.size() + from_y.size();
      return result;
    }
    front = std::move(next);
  }
  result.verdict = OracleVerdict::UnequalWithinBound;
  result.nodes = from_x.size() + from_y.size();
  return result;
}

inline OracleResult bottleneck_search(const Presentation& presentation,
                                      const Word& x, const Word& y,
                                      std::size_t bound, std::size_t budget) {
  OracleResult result;
  SearchTree tree(x);
  std::vector<std::size_t> best{x.size()};
  std::vector<std::vector<std::uint32_t>> buckets(bound + 1);
  buckets[x.size()].push_back(0);
  for (std::size_t level = x.size(); level <= bound; ++level) {
    for (std::size_t k = 0; k < buckets[level].size(); ++k) {
      const std::uint32_t id = buckets[level][k];
      if (best[id] != level) continue;
      if (tree[id].word == y) {
        result.verdict = OracleVerdict::Equal;
        result.certificate = tree.path_to(id);
        result.nodes = tree.size();
        return result;
      }
      const Word current = tree[id].word;
      for_each_neighbor(
          presentation, current, bound, [&](Word w, Application app) {
            const std::size_t b = std::max(level, w.size());
            if (auto nid = tree.find(w)) {
              if (b < best[*nid]) {
                best[*nid] = b;
                tree[*nid].parent = id;
                tree[*nid].via = app;
                buckets[b].push_back(*nid);
              }
              return;
            }
            tree.add(w, id, app);
            best.push_back(b);
            buckets[b].push_back(static_cast<std::uint32_t>(tree.size() - 1));
          });
      if (tree.size() > budget) {
        result.nodes = tree.size();
        return result;
      }
    }
  }
  result.verdict = OracleVerdict::UnequalWithinBound;
  result.nodes = tree.size();
  return result;
}

}  // namespace detail

/// Bounded search for a derivation x ~ ... ~ y through words of length at
/// most `bound`. Unequal-within-bound means the bounded component was
/// exhausted; it is not a proof of inequality in the monoid.
inline OracleResult equal_in_monoid(const Presentation& presentation,
                                    const Word& x, const Word& y,
                                    std::size_t bound,
                                    const OracleOptions& options = {}) {
  presentation.alphabet().require(x);
  presentation.alphabet().require(y);
  if (bound < std::max(x.size(), y.size()))
    throw Error("equal_in_monoid: bound below the input lengths");
  if (x == y) {
    OracleResult r;
    r.verdict = OracleVerdict::Equal;
    r.certificate = EqualityCertificate{{x}, {}};
    r.nodes = 1;
    return r;
  }
  if (options.mode == SearchMode::MinSpace)
    return detail::bottleneck_search(presentation, x, y, bound,
                                     options.node_budget);
  return detail::bidirectional_bfs(presentation, x, y, bound,
                                   options.node_budget);
}

/// Equality check with iterative deepening of the length slack: the bound
/// starts at max(|x|,|y|) + slack and the slack doubles `deepenings` times
/// while the answer stays short of Equal.
struct DeepeningOptions {
  std::size_t slack = 0;  // 0: 2 * longest relation side
  unsigned deepenings = 2;
  std::size_t node_budget = kDefaultNodeBudget;
};

struct DeepenedResult {
  OracleResult result;
  std::size_t bound = 0;
};

inline DeepenedResult equal_with_deepening(const Presentation& presentation,
                                           const Word& x, const Word& y,
                                           const DeepeningOptions& options = {}) {
  std::size_t slack =
      options.slack ? options.slack : 2 * presentation.max_side_length();
  DeepenedResult out;
  for (unsigned round = 0; round <= options.deepenings; ++round, slack *= 2) {
    out.bound = std::max(x.size(), y.size()) + slack;
    out.result = equal_in_monoid(presentation, x, y, out.bound,
                                 {options.node_budget, SearchMode::MinSteps});
    if (out.result.verdict == OracleVerdict::Equal) break;
  }
  return out;
}

struct DehnPair {
  Word x;
  Word y;
  std::size_t value = 0;
};

/// Maxima of d(x,y) and s(x,y) over equal pairs with |x|,|y| <= n among the
/// examined words. Reflexive pairs count (d = 0, s = |x|), so the supremum
/// over an empty set of non-trivial pairs is dehn 0.
struct DehnSample {
  std::size_t n = 0;
  std::size_t dehn = 0;
  std::size_t space = 0;
  std::size_t pairs_examined = 0;
  bool exhaustive = false;
  std::optional<DehnPair> dehn_witness;
  std::optional<DehnPair> space_witness;
};

struct DehnOptions {
  enum class Mode { Exhaustive, Random };
  Mode mode = Mode::Exhaustive;
  std::size_t random_count = 1000;
  std::uint64_t seed = 1;
  std::size_t slack = 0;  // 0: 2 * longest relation side
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t exhaustive_ceiling = 14;
};

namespace detail {

struct SourceDistances {
  // word -> (d-minimal steps, space along a d-minimal path, space-minimal)
  struct Entry {
    std::size_t steps;
    std::size_t step_space;
    std::size_t min_space;
  };
  std::unordered_map<Word, Entry> reached;
  bool complete = true;
};

inline SourceDistances distances_from(const Presentation& presentation,
                                      const Word& x, std::size_t cap,
                                      std::size_t budget) {
  SourceDistances out;
  // Breadth-first layers for steps; ties keep the smaller path maximum.
  std::vector<Word> layer{x};
  out.reached.emplace(x, SourceDistances::Entry{0, x.size(), x.size()});
  for (std::size_t depth = 1; !layer.empty(); ++depth) {
    std::vector<Word> next;
    for (const Word& u : layer) {
      const std::size_t su = out.reached.at(u).step_space;
      for_each_neighbor(presentation, u, cap, [&](Word w, Application) {
        const std::size_t sw = std::max(su, w.size());
        auto [it, fresh] =
            out.reached.emplace(w, SourceDistances::Entry{depth, sw, 0});
        if (fresh)
          next.push_back(std::move(w));
        else if (it->second.steps == depth && sw < it->second.step_space)
          it->second.step_space = sw;
      });
      if (out.reached.size() > budget) {
        out.complete = false;
        return out;
      }
    }
    layer = std::move(next);
  }
  // Bottleneck (minimax length) pass over the same component.
  std::unordered_map<Word, std::size_t> best;
  std::vector<std::vector<Word>> buckets(cap + 1);
  best.emplace(x, x.size());
  buckets[x.size()].push_back(x);
  for (std::size_t level = x.size(); level <= cap; ++level) {
    for (std::size_t k = 0; k < buckets[level].size(); ++k) {
      const Word u = buckets[level][k];
      if (best.at(u) != level) continue;
      for_each_neighbor(presentation, u, cap, [&](Word w, Application) {
        const std::size_t b = std::max(level, w.size());
        auto [it, fresh] = best.emplace(w, b);
        if (fresh || b < it->second) {
          it->second = b;
          buckets[b].push_back(std::move(w));
        }
      });
    }
  }
  for (auto& [w, entry] : out.reached) entry.min_space = best.at(w);
  return out;
}

inline std::vector<Word> words_up_to(const Alphabet& alphabet,
                                     std::size_t max_length) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter c : alphabet) out.push_back(out[i] + Word(std::string(1, c)));
    begin = end;
  }
  return out;
}

}  // namespace detail

/// Dehn and space samples for every n in [n_min, n_max], measured in one
/// pass with the common length cap n_max + slack, so the columns are
/// non-decreasing in n.
inline std::vector<DehnSample> dehn_table(const Presentation& presentation,
                                          std::size_t n_min, std::size_t n_max,
                                          const DehnOptions& options = {}) {
  if (n_min < 1 || n_max < n_min) throw Error("dehn: need 1 <= n_min <= n_max");
  const bool exhaustive_mode = options.mode == DehnOptions::Mode::Exhaustive;
  if (exhaustive_mode && n_max > options.exhaustive_ceiling)
    throw Error("dehn: exhaustive mode is limited to n <= " +
                std::to_string(options.exhaustive_ceiling));
  const std::size_t slack =
      options.slack ? options.slack : 2 * presentation.max_side_length();
  const std::size_t cap = n_max + slack;

  std::vector<Word> sources;
  if (exhaustive_mode) {
    sources = detail::words_up_to(presentation.alphabet(), n_max);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> len(0, n_max);
    std::uniform_int_distribution<std::size_t> letter(
        0, presentation.alphabet().size() - 1);
    for (std::size_t i = 0; i < options.random_count; ++i) {
      std::string s(len(rng), ' ');
      for (auto& c : s) c = presentation.alphabet()[letter(rng)];
      sources.emplace_back(std::move(s));
    }
    std::sort(sources.begin(), sources.end(), shortlex_less);
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  }

  // Per m = max(|x|,|y|): largest d and s, pair counts.
  struct Bucket {
    std::size_t pairs = 0;
    std::optional<DehnPair> dw, sw;
  };
  std::vector<Bucket> by_m(n_max + 1);
  bool complete = exhaustive_mode;
  for (const Word& x : sources) {
    auto reach = detail::distances_from(presentation, x, cap,
                                        options.node_budget);
    if (!reach.complete) {
      complete = false;
      continue;
    }
    for (const auto& [y, e] : reach.reached) {
      if (y.size() > n_max) continue;
      // Exhaustive mode visits each unordered pair from both ends.
      if (exhaustive_mode && shortlex_less(y, x)) continue;
      auto& b = by_m[std::max(x.size(), y.size())];
      if (!(x == y)) ++b.pairs;
      if (!b.dw || e.steps > b.dw->value) b.dw = DehnPair{x, y, e.steps};
      if (!b.sw || e.min_space > b.sw->value)
        b.sw = DehnPair{x, y, e.min_space};
    }
  }

  std::vector<DehnSample> table;
  DehnSample running;
  running.exhaustive = complete;
  for (std::size_t m = 0; m <= n_max; ++m) {
    const auto& b = by_m[m];
    running.pairs_examined += b.pairs;
    if (b.dw && (!running.dehn_witness || b.dw->value > running.dehn)) {
      running.dehn = b.dw->value;
      running.dehn_witness = b.dw;
    }
    if (b.sw && (!running.space_witness || b.sw->value > running.space)) {
      running.space = b.sw->value;
      running.space_witness = b.sw;
    }
    if (m >= n_min) {
      running.n = m;
      table.push_back(running);
    }
  }
  return table;
}

inline DehnSample dehn_sample(const Presentation& presentation, std::size_t n,
                              const DehnOptions& options = {}) {
  return dehn_table(presentation, n, n, options).front();
}

/// Irreducible words of length <= max_length in shortlex order (letters in
/// declaration order). Requires a complete certification unless
/// `allow_uncertified`.
inline std::vector<Word> enumerate_elements(const RewritingSystem& system,
                                            std::size_t max_length,
                                            bool allow_uncertified = false) {
  if (!allow_uncertified &&
      system.certification() != Certification::Complete)
    throw Error(
        "enumerate_elements: system is not certified complete (override "
        "required)");
  // Irreducible words are closed under prefixes, so extending them by one
  // letter and testing suffixes suffices.
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter c : system.alphabet()) {
        Word w = out[i] + Word(std::string(1, c));
        bool reducible = std::any_of(
            system.rules().begin(), system.rules().end(), [&](const Rule& r) {
              return r.lhs.size() <= w.size() &&
                     w.occurs_at(w.size() - r.lhs.size(), r.lhs);
            });
        if (!reducible) out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace monorel
