#pragma once

// Randomized properties shared by the unit suite and the acceptance binary.
// Each runner draws `cases` instances from a fixed seed and reports the
// first counterexample.

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monorel/monorel.hpp"
#include "oracles.hpp"

namespace props {

using namespace monorel;

inline constexpr std::uint64_t kSeed = 0x6d6f6e6f72656cULL;
inline constexpr std::size_t kCases = 10'000;

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && cases > 0; }
};

inline std::string random_string(std::mt19937_64& rng, std::string_view letters,
                                 std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = letters[pick(rng)];
  return s;
}

inline oracle::Rules plain_rules(const RewritingSystem& sys) {
  oracle::Rules out;
  for (const auto& r : sys.rules()) out.emplace_back(r.lhs.str(), r.rhs.str());
  return out;
}

inline oracle::Relations plain_relations(const Presentation& p) {
  oracle::Relations out;
  for (const auto& e : p.equations()) out.emplace_back(e.lhs.str(), e.rhs.str());
  return out;
}

/// Certified-complete systems over the grid [1..4]^4, with their
/// one-relator presentations.
struct Certified {
  family::Classification cls;
  RewritingSystem system;
  Presentation presentation;
};

inline const std::vector<Certified>& complete_grid() {
  static const std::vector<Certified> pool = [] {
    std::vector<Certified> out;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int g = 1; g <= 4; ++g)
          for (int d = 1; d <= 4; ++d) {
            auto cls = family::classify(a, b, g, d);
            auto cert = family::certify(cls);
            if (cert.system.certification() == Certification::Complete)
              out.push_back({cls, cert.system,
                             family::one_relator_presentation(cls.params)});
          }
    return out;
  }();
  return pool;
}

/// Applies `steps` random relation applications to w, keeping every
/// intermediate word within `bound`. Returns the longest word seen.
inline std::size_t random_walk(std::mt19937_64& rng,
                               const oracle::Relations& rel, std::string& w,
                               std::size_t steps, std::size_t bound) {
  std::size_t longest = w.size();
  for (std::size_t i = 0; i < steps; ++i) {
    auto next = oracle::neighbours(rel, w, bound);
    if (next.empty()) break;
    w = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    longest = std::max(longest, w.size());
  }
  return longest;
}

/// Weighted shortlex orders are total, antisymmetric, transitive,
/// compatible with concatenation and agree with the reference comparison.
inline Result order_properties(std::size_t cases = kCases,
                               std::uint64_t seed = kSeed) {
  Result res;
  res.name = "order totality/monotonicity";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> weight(1, 5);
  for (std::size_t n = 0; n < cases; ++n, ++res.cases) {
    std::string letters = n % 2 ? "abx" : "ab";
    std::map<char, unsigned> wmap;
    std::vector<unsigned> ws;
    for (char c : letters) ws.push_back(wmap[c] = weight(rng));
    std::string prec = letters;
    std::shuffle(prec.begin(), prec.end(), rng);
    const Alphabet alphabet(letters);
    const ReductionOrder order(alphabet, ws, prec);
    const std::string u = random_string(rng, letters, 8),
                      v = random_string(rng, letters, 8),
                      w = random_string(rng, letters, 8),
                      p = random_string(rng, letters, 4),
                      s = random_string(rng, letters, 4);
    const Word U(u), V(v), W(w);
    auto sign = [](std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; };
    const int uv = sign(order.compare(U, V));
    std::ostringstream ctx;
    ctx << to_string(order) << " u=" << u << " v=" << v << " w=" << w;
    if (uv != oracle::compare(wmap, prec, u, v))
      res.fail("disagrees with reference: " + ctx.str());
    if ((uv == 0) != (u == v)) res.fail("not total: " + ctx.str());
    if (sign(order.compare(V, U)) != -uv) res.fail("not antisymmetric: " + ctx.str());
    if (uv < 0 && sign(order.compare(Word(p + u + s), Word(p + v + s))) >= 0)
      res.fail("not monotone under p=" + p + " s=" + s + ": " + ctx.str());
    const int vw = sign(order.compare(V, W));
    if (uv < 0 && vw < 0 && sign(order.compare(U, W)) >= 0)
      res.fail("not transitive: " + ctx.str());
  }
  return res;
}

/// Normal forms agree with the reference reducer, are irreducible and
/// idempotent, are constant on relation classes, and the recorded trace
/// replays rule by rule.
inline Result normal_form_properties(std::size_t cases = kCases,
                                     std::uint64_t seed = kSeed + 1) {
  Result res;
  res.name = "normal-form idempotence/class-constancy";
  const auto& pool = complete_grid();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t n = 0; n < cases; ++n, ++res.cases) {
    const auto& c = pool[pick(rng)];
    const auto& sys = c.system;
    const std::string w = random_string(rng, sys.alphabet().letters(), 14);
    std::ostringstream ctx;
    ctx << family::to_string(c.cls.tag.variant) << " (" << c.cls.params.alpha
        << c.cls.params.beta << c.cls.params.gamma << c.cls.params.delta
        << ") w=" << w;
    const auto nf = normal_form(sys, Word(w));
    const auto ref = oracle::normal_form(plain_rules(sys), w);
    if (!ref || *ref != nf.word.str())
      res.fail("differs from reference: " + ctx.str());
    if (!sys.is_irreducible(nf.word) || reduce(sys, nf.word) != nf.word)
      res.fail("not idempotent: " + ctx.str());
    Word cur(w);
    for (const auto& st : nf.trace.steps) {
      const Rule& r = sys[st.rule];
      if (!cur.occurs_at(st.position, r.lhs) ||
          cur.splice(st.position, r.lhs.size(), r.rhs) != st.result) {
        res.fail("trace does not replay: " + ctx.str());
        break;
      }
      cur = st.result;
    }
    // Class constancy under one relation application, in either direction,
    // plus the definition of x where the system uses it.
    oracle::Relations rel = plain_relations(c.presentation);
    if (family::uses_x(c.cls.tag.variant))
      rel.emplace_back(family::x_definition(c.cls.params).str(), "x");
    auto next = oracle::neighbours(rel, w, w.size() + 32);
    if (!next.empty()) {
      const auto& w2 =
          next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
      if (reduce(sys, Word(w2)) != nf.word)
        res.fail("class not constant: " + ctx.str() + " vs " + w2);
    }
  }
  return res;
}

inline std::vector<Presentation> small_presentations() {
  std::vector<Presentation> out{
      Presentation(Alphabet("ab"), {{Word("abab"), Word("b")}}),
      Presentation(Alphabet("ab"), {{Word("abba"), Word("b")}}),
      Presentation(Alphabet("ab"), {{Word("aab"), Word("ba")}})};
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int g = 1; g <= 2; ++g)
        for (int d = 1; d <= 2; ++d)
          out.push_back(family::one_relator_presentation(
              family::classify(a, b, g, d).params));
  return out;
}

/// Oracle certificates replay, connect the right endpoints, stay within the
/// bound, and are optimal for their mode against the reference searches.
inline Result certificate_properties(std::size_t cases = kCases,
                                     std::uint64_t seed = kSeed + 2) {
  Result res;
  res.name = "certificate replay validity";
  const auto pool = small_presentations();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> walk(1, 4);
  for (std::size_t n = 0; n < cases; ++n, ++res.cases) {
    const auto& pres = pool[pick(rng)];
    const auto rel = plain_relations(pres);
    const std::string u = random_string(rng, "ab", 6);
    std::string v = u;
    const std::size_t slack = 2 * pres.max_side_length();
    const std::size_t bound =
        random_walk(rng, rel, v, walk(rng), u.size() + slack);
    const bool space_mode = n % 2;
    std::ostringstream ctx;
    ctx << print_word(pres.equations()[0].lhs) << "=" << print_word(pres.equations()[0].rhs)
        << " u=" << u << " v=" << v << " bound=" << bound
        << (space_mode ? " space" : " steps");
    auto r = equal_in_monoid(
        pres, Word(u), Word(v), bound,
        {kDefaultNodeBudget, space_mode ? SearchMode::MinSpace : SearchMode::MinSteps});
    if (r.verdict != OracleVerdict::Equal || !r.certificate) {
      res.fail("walk-connected pair not found equal: " + ctx.str());
      continue;
    }
    const auto& cert = *r.certificate;
    if (!replay(pres, cert)) res.fail("certificate does not replay: " + ctx.str());
    if (cert.chain.front().str() != u || cert.chain.back().str() != v)
      res.fail("wrong endpoints: " + ctx.str());
    if (cert.s() > bound) res.fail("exceeds bound: " + ctx.str());
    if (space_mode) {
      if (cert.s() != oracle::min_space(rel, u, v, bound))
        res.fail("space not minimal: " + ctx.str());
    } else if (cert.d() != oracle::distance(rel, u, v, bound)) {
      res.fail("steps not minimal: " + ctx.str());
    }
  }
  return res;
}

/// On complete systems the oracle and normal forms never disagree: an
/// Equal verdict implies equal normal forms, and pairs connected by a
/// random walk have equal normal forms and are found equal.
inline Result oracle_consistency(std::size_t cases = kCases,
                                 std::uint64_t seed = kSeed + 3) {
  Result res;
  res.name = "oracle/normal-form consistency";
  const auto& pool = complete_grid();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> walk(1, 3);
  for (std::size_t n = 0; n < cases; ++n, ++res.cases) {
    const auto& c = pool[pick(rng)];
    const auto rel = plain_relations(c.presentation);
    const std::string u = random_string(rng, "ab", 8);
    std::string v;
    const std::size_t slack = 2 * c.presentation.max_side_length();
    std::size_t bound = 0;
    const bool related = n % 2 == 0;
    if (related) {
      v = u;
      bound = random_walk(rng, rel, v, walk(rng), u.size() + slack);
    } else {
      v = random_string(rng, "ab", 8);
      bound = std::max(u.size(), v.size()) + slack;
    }
    std::ostringstream ctx;
    ctx << "(" << c.cls.params.alpha << c.cls.params.beta << c.cls.params.gamma
        << c.cls.params.delta << ") u=" << u << " v=" << v;
    const bool same_nf = reduce(c.system, Word(u)) == reduce(c.system, Word(v));
    auto r = equal_in_monoid(c.presentation, Word(u), Word(v), bound,
                             {100'000, SearchMode::MinSteps});
    if (r.verdict == OracleVerdict::Equal && !same_nf)
      res.fail("oracle equal, normal forms differ: " + ctx.str());
    if (related && !same_nf)
      res.fail("related words have different normal forms: " + ctx.str());
    if (related && r.verdict != OracleVerdict::Equal)
      res.fail("related words not found equal: " + ctx.str());
  }
  return res;
}

inline std::vector<Result> run_all(std::size_t cases = kCases) {
  return {order_properties(cases), normal_form_properties(cases),
          certificate_properties(cases), oracle_consistency(cases)};
}

}  // namespace props
