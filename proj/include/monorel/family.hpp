#pragma once

// The family Mon<a,b : a^alpha b^beta a^gamma b^delta = b>: case
// classification, the finite complete systems for each case, and checks that
// a constructed system presents the same monoid.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monorel/analysis.hpp"
#include "monorel/confluence.hpp"
#include "monorel/presentation.hpp"
#include "monorel/rewrite.hpp"
#include "monorel/words.hpp"

namespace monorel::family {

enum class Variant { NoOverlap, Case1, Case2, Case3, Case4 };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::NoOverlap: return "NoOverlap";
    case Variant::Case1: return "Case1";
    case Variant::Case2: return "Case2";
    case Variant::Case3: return "Case3";
    case Variant::Case4: return "Case4";
  }
  return "?";
}

struct CaseTag {
  Variant variant = Variant::NoOverlap;
  /// Case 4 only: q >= s - 1, which adds a fifth rule.
  bool extra_rule = false;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// Exponents of the relator and, when it overlaps itself, its normalised
/// shape a^p b^{q+s} a^{r+pk} b^s.
struct FamilyParams {
  unsigned alpha = 1, beta = 1, gamma = 1, delta = 1;
  unsigned p = 0, q = 0, r = 0, s = 0, k = 0;  // meaningful when overlapping
  bool overlapping = false;
};

struct Classification {
  CaseTag tag;
  FamilyParams params;
};

inline Classification classify(int alpha, int beta, int gamma, int delta) {
  if (alpha < 1 || beta < 1 || gamma < 1 || delta < 1)
    throw Error("exponents must all be at least 1");
  Classification c;
  auto& P = c.params;
  P.alpha = static_cast<unsigned>(alpha);
  P.beta = static_cast<unsigned>(beta);
  P.gamma = static_cast<unsigned>(gamma);
  P.delta = static_cast<unsigned>(delta);
  if (!(beta >= delta && gamma >= alpha)) return c;
  P.overlapping = true;
  P.p = P.alpha;
  P.s = P.delta;
  P.q = P.beta - P.delta;
  P.r = P.gamma % P.p;
  P.k = P.gamma / P.p;
  if (P.s == 1)
    c.tag.variant = Variant::Case1;
  else if (P.r > 0)
    c.tag.variant = Variant::Case2;
  else if (P.k == 1)
    c.tag.variant = Variant::Case3;
  else
    c.tag.variant = Variant::Case4;
  c.tag.extra_rule =
      c.tag.variant == Variant::Case4 && P.q + 1 >= P.s;  // q >= s-1
  return c;
}

inline Word a_pow(std::size_t n) { return Word::power('a', n); }
inline Word b_pow(std::size_t n) { return Word::power('b', n); }
inline const Word& x_letter() {
  static const Word x("x");
  return x;
}

inline Word relator(const FamilyParams& P) {
  return a_pow(P.alpha) + b_pow(P.beta) + a_pow(P.gamma) + b_pow(P.delta);
}

/// a^{pk} b^s, the word the auxiliary letter x stands for.
inline Word x_definition(const FamilyParams& P) {
  return a_pow(P.p * P.k) + b_pow(P.s);
}

inline Presentation one_relator_presentation(const FamilyParams& P) {
  return Presentation(Alphabet("ab"), {{relator(P), Word("b")}});
}

/// <a,b,x | relator = b, a^{pk} b^s = x>.
inline Presentation tietze_presentation(const FamilyParams& P) {
  return Presentation(Alphabet("abx"),
                      {{relator(P), Word("b")}, {x_definition(P), x_letter()}});
}

inline bool uses_x(Variant v) {
  return v == Variant::Case3 || v == Variant::Case4;
}

/// The complete system for the case, rule for rule.
inline RewritingSystem build_system(const CaseTag& tag,
                                    const FamilyParams& P) {
  auto expected = classify(static_cast<int>(P.alpha), static_cast<int>(P.beta),
                           static_cast<int>(P.gamma), static_cast<int>(P.delta));
  if (!(expected.tag == tag) || expected.params.overlapping != P.overlapping ||
      (P.overlapping &&
       (P.p != expected.params.p || P.q != expected.params.q ||
        P.r != expected.params.r || P.s != expected.params.s ||
        P.k != expected.params.k)))
    throw Error("build_system: case tag does not match the parameters");

  const Word b("b");
  const Word& x = x_letter();
  std::vector<Rule> rules;
  switch (tag.variant) {
    case Variant::NoOverlap:
      rules.emplace_back(relator(P), b);
      return RewritingSystem(Alphabet("ab"), std::move(rules));

    case Variant::Case1: {
      const Word head = a_pow(P.p) + b_pow(P.q + 1);
      rules.emplace_back(head + a_pow(P.r + P.p * P.k) + b, b);
      for (unsigned i = 0; i < P.k; ++i)
        rules.emplace_back(head + a_pow(P.r + P.p * i) + b,
                           b_pow(P.q + 1) + a_pow(P.r + P.p * (i + 1)) + b);
      return RewritingSystem(Alphabet("ab"), std::move(rules));
    }

    case Variant::Case2: {
      const Word head = a_pow(P.p) + b_pow(P.q + P.s);
      const Word block = a_pow(P.r + P.p * P.k);
      rules.emplace_back(head + block + b_pow(P.s), b);
      for (unsigned i = 0; i < P.k; ++i)
        rules.emplace_back(head + a_pow(P.r + P.p * i) + b,
                           b_pow(P.q + 1) +
                               (block + b_pow(P.q + 2 * P.s - 1)).pow(P.k - 1 - i) +
                               block + b_pow(P.s));
      return RewritingSystem(Alphabet("ab"), std::move(rules));
    }

    case Variant::Case3:
      rules.emplace_back(a_pow(P.p) + b_pow(P.s), x);
      rules.emplace_back(x + b_pow(P.q) + x, b);
      rules.emplace_back(x + b_pow(P.q + 1), b_pow(P.q + 1) + x);
      return RewritingSystem(Alphabet("abx"), std::move(rules));

    case Variant::Case4: {
      const Word xbqx = x + b_pow(P.q) + x;
      const Word loop = b_pow(P.q + P.s - 1) + x;
      rules.emplace_back(a_pow(P.p) + xbqx + b_pow(P.s - 1), x);
      rules.emplace_back(a_pow(P.p) + b, xbqx + loop.pow(P.k - 2));
      rules.emplace_back(xbqx + loop.pow(P.k - 1), b);
      rules.emplace_back(xbqx + loop.pow(P.k - 2) + b_pow(P.q + P.s),
                         b_pow(P.q + 1) + x + loop.pow(P.k - 1));
      if (tag.extra_rule)
        rules.emplace_back(a_pow(P.p) + x + b_pow(P.q + 1),
                           x + b_pow(P.q + 1 - P.s) + x + loop.pow(P.k - 1));
      return RewritingSystem(Alphabet("abx"), std::move(rules));
    }
  }
  throw Error("build_system: unknown case");
}

inline RewritingSystem build_system(const Classification& c) {
  return build_system(c.tag, c.params);
}

/// Replaces every x by its definition.
inline Word substitute_x(const Word& w, const Word& x_def) {
  std::string out;
  for (Letter c : w) {
    if (c == 'x')
      out += x_def.str();
    else
      out += c;
  }
  return Word(std::move(out));
}

struct IdentityCheck {
  std::string label;
  Word lhs;
  Word rhs;
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  std::optional<EqualityCertificate> certificate;
  std::size_t bound = 0;
  std::size_t nodes = 0;
};

struct RelationCheck {
  std::size_t equation;
  Word lhs_normal_form;
  Word rhs_normal_form;
  bool agrees = false;
};

struct EquivalenceReport {
  std::vector<IdentityCheck> rules;       // constructed rule -> original
  std::vector<RelationCheck> relations;  // original relation -> constructed
  bool pass() const {
    for (const auto& r : rules)
      if (r.verdict != OracleVerdict::Equal) return false;
    for (const auto& r : relations)
      if (!r.agrees) return false;
    return true;
  }
  std::size_t inconclusive() const {
    std::size_t n = 0;
    for (const auto& r : rules)
      if (r.verdict == OracleVerdict::Inconclusive) ++n;
    return n;
  }
};

/// (i) every constructed rule, with x replaced by `x_definition`, holds in
/// the original presentation (bounded oracle with deepening); (ii) both
/// sides of every original relation share a normal form in `constructed`.
inline EquivalenceReport verify_presentation_equivalence(
    const Presentation& original, const RewritingSystem& constructed,
    const std::optional<Word>& x_definition,
    const DeepeningOptions& search = {}, std::size_t fuel = kDefaultFuel) {
  const bool has_x = constructed.alphabet().contains('x') &&
                     !original.alphabet().contains('x');
  if (has_x && !x_definition)
    throw Error("constructed alphabet has x but no x definition was given");
  EquivalenceReport report;
  for (std::size_t i = 0; i < constructed.size(); ++i) {
    const Rule& rule = constructed[i];
    IdentityCheck check;
    check.label = to_string(rule);
    check.lhs = has_x ? substitute_x(rule.lhs, *x_definition) : rule.lhs;
    check.rhs = has_x ? substitute_x(rule.rhs, *x_definition) : rule.rhs;
    auto found = equal_with_deepening(original, check.lhs, check.rhs, search);
    check.verdict = found.result.verdict;
    check.certificate = std::move(found.result.certificate);
    check.bound = found.bound;
    check.nodes = found.result.nodes;
    report.rules.push_back(std::move(check));
  }
  for (std::size_t e = 0; e < original.equations().size(); ++e) {
    const auto& eq = original.equations()[e];
    RelationCheck rc{e, reduce(constructed, eq.lhs, fuel),
                     reduce(constructed, eq.rhs, fuel), false};
    rc.agrees = rc.lhs_normal_form == rc.rhs_normal_form;
    report.relations.push_back(std::move(rc));
  }
  return report;
}

/// Replays the identities used to derive the Case 4 system, each checked by
/// the oracle on <a,b,x | relator = b, a^{pk}b^s = x>.
inline std::vector<IdentityCheck> check_derivation_chain(
    const FamilyParams& P, const DeepeningOptions& search = {}) {
  auto c = classify(static_cast<int>(P.alpha), static_cast<int>(P.beta),
                    static_cast<int>(P.gamma), static_cast<int>(P.delta));
  if (c.tag.variant != Variant::Case4)
    throw Error("check_derivation_chain: parameters are not in Case 4");
  const Word b("b");
  const Word& x = x_letter();
  const Word xbqx = x + b_pow(P.q) + x;
  const Word loop = b_pow(P.q + P.s - 1) + x;
  std::vector<IdentityCheck> checks;
  auto add = [&](std::string label, Word lhs, Word rhs) {
    IdentityCheck chk;
    chk.label = std::move(label);
    chk.lhs = std::move(lhs);
    chk.rhs = std::move(rhs);
    checks.push_back(std::move(chk));
  };
  add("a^{p(k-1)}b = xb^qx", a_pow(P.p * (P.k - 1)) + b, xbqx);
  add("a^p xb^qx b^{s-1} = x", a_pow(P.p) + xbqx + b_pow(P.s - 1), x);
  add("a^p b = xb^qx (b^{q+s-1}x)^{k-2}", a_pow(P.p) + b,
      xbqx + loop.pow(P.k - 2));
  add("b = xb^qx (b^{q+s-1}x)^{k-1}", b, xbqx + loop.pow(P.k - 1));
  add("xb^qx (b^{q+s-1}x)^{k-2} b^{q+s} = b^{q+1}x (b^{q+s-1}x)^{k-1}",
      xbqx + loop.pow(P.k - 2) + b_pow(P.q + P.s),
      b_pow(P.q + 1) + x + loop.pow(P.k - 1));
  if (c.tag.extra_rule)
    add("a^p x b^{q+1} = x b^{q-(s-1)} x (b^{q+s-1}x)^{k-1}",
        a_pow(P.p) + x + b_pow(P.q + 1),
        x + b_pow(P.q + 1 - P.s) + x + loop.pow(P.k - 1));
  const Presentation pres = tietze_presentation(P);
  for (auto& chk : checks) {
    auto found = equal_with_deepening(pres, chk.lhs, chk.rhs, search);
    chk.verdict = found.result.verdict;
    chk.certificate = std::move(found.result.certificate);
    chk.bound = found.bound;
    chk.nodes = found.result.nodes;
  }
  return checks;
}

/// Weight bounds for the termination-order search: 8 for every letter, and
/// for a the largest of 8, p*k+s and the longest right-hand side. With unit
/// weights on b and x the last bound already orients every rule whose lhs
/// contains a but whose rhs does not.
inline WeightCaps default_weight_caps(const FamilyParams& P,
                                      const RewritingSystem& system) {
  std::size_t longest = 0;
  for (const auto& r : system.rules()) longest = std::max(longest, r.rhs.size());
  unsigned a_cap = std::max<unsigned>(8, static_cast<unsigned>(longest));
  if (P.overlapping) a_cap = std::max(a_cap, P.p * P.k + P.s);
  return WeightCaps{8, {{'a', a_cap}}};
}

struct TerminationEvidence {
  std::size_t samples = 0;
  std::size_t max_length = 0;
  std::size_t fuel = 0;
  std::size_t halted = 0;
  std::size_t max_steps_seen = 0;
  bool all_halted() const { return halted == samples; }
};

/// Normalizes `samples` random words over {a,b} of length <= max_length and
/// records whether each derivation halts within `fuel` steps.
inline TerminationEvidence empirical_termination(
    const RewritingSystem& system, std::size_t samples = 200,
    std::size_t max_length = 20, std::size_t fuel = 100'000,
    std::uint64_t seed = 20240501) {
  TerminationEvidence ev{samples, max_length, fuel, 0, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < samples; ++i) {
    std::string s(len(rng), 'a');
    for (auto& c : s) c = coin(rng) ? 'b' : 'a';
    try {
      auto nf = normal_form(system, Word(std::move(s)), fuel);
      ++ev.halted;
      ev.max_steps_seen = std::max(ev.max_steps_seen, nf.steps);
    } catch (const FuelExhausted&) {
    }
  }
  return ev;
}

/// Certification of a constructed system: local confluence for every case;
/// a weighted shortlex termination order for every case except Case 2,
/// which gets empirical evidence instead and stays below complete.
struct FamilyCertification {
  Classification classification;
  RewritingSystem system;
  LocalConfluenceReport confluence;
  std::optional<ReductionOrder> order;
  std::optional<TerminationEvidence> empirical;
  WeightCaps caps;
};

inline FamilyCertification certify(const Classification& c,
                                   std::optional<WeightCaps> caps = {},
                                   std::size_t fuel = kDefaultFuel) {
  RewritingSystem sys = build_system(c);
  WeightCaps used = caps ? *caps : default_weight_caps(c.params, sys);
  auto conf = check_local_confluence(sys, fuel);
  FamilyCertification out{c, conf.system, conf, std::nullopt, std::nullopt,
                          used};
  if (c.tag.variant == Variant::Case2) {
    out.empirical = empirical_termination(out.system);
    return out;
  }
  out.order = find_termination_order(out.system, used);
  if (out.order) out.system = verify_termination(out.system, *out.order).system;
  return out;
}

}  // namespace monorel::family
