#pragma once

// Endomorphisms of a finitely presented monoid given by images of its
// generators, checked against a complete rewriting system for the monoid.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monorel/analysis.hpp"
#include "monorel/confluence.hpp"
#include "monorel/family.hpp"
#include "monorel/presentation.hpp"
#include "monorel/rewrite.hpp"
#include "monorel/words.hpp"

namespace monorel {

/// Generator -> image word, both over the presentation's generators.
class EndomorphismSpec {
 public:
  EndomorphismSpec(const Alphabet& generators, std::map<Letter, Word> images)
      : generators_(generators), images_(std::move(images)) {
    for (Letter g : generators_)
      if (!images_.count(g))
        throw Error(std::string("no image for generator '") + g + "'");
    for (const auto& [g, w] : images_) {
      if (!generators_.contains(g))
        throw Error(std::string("image given for non-generator '") + g + "'");
      generators_.require(w);
    }
  }

  static EndomorphismSpec identity(const Alphabet& generators) {
    std::map<Letter, Word> images;
    for (Letter g : generators) images.emplace(g, Word(std::string(1, g)));
    return EndomorphismSpec(generators, std::move(images));
  }

  /// Parses "a=a,b=bab".
  static EndomorphismSpec parse(std::string_view text,
                                const Alphabet& generators) {
    std::map<Letter, Word> images;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto item = text.substr(pos, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - pos);
      auto eq = item.find('=');
      auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
      };
      auto key = trim(item.substr(0, eq == std::string_view::npos ? 0 : eq));
      if (eq == std::string_view::npos || key.size() != 1)
        throw ParseError("malformed map entry \"" + std::string(item) + "\"");
      if (!images.emplace(key[0], parse_word(item.substr(eq + 1), generators))
               .second)
        throw ParseError(std::string("generator '") + key[0] +
                         "' mapped twice");
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    try {
      return EndomorphismSpec(generators, std::move(images));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }

  const Alphabet& generators() const noexcept { return generators_; }
  const std::map<Letter, Word>& images() const noexcept { return images_; }
  const Word& image(Letter g) const {
    auto it = images_.find(g);
    if (it == images_.end())
      throw Error(std::string("letter '") + g + "' has no image");
    return it->second;
  }

 private:
  Alphabet generators_;
  std::map<Letter, Word> images_;
};

inline std::string to_string(const EndomorphismSpec& phi) {
  std::string out;
  for (const auto& [g, w] : phi.images()) {
    if (!out.empty()) out += ',';
    out += std::string(1, g) + "=" + print_word(w);
  }
  return out;
}

/// Homomorphic extension of the generator images.
inline Word apply_substitution(const EndomorphismSpec& phi, const Word& w) {
  std::string out;
  for (Letter c : w) out += phi.image(c).str();
  return Word(std::move(out));
}

/// (outer o inner)(g) = outer(inner(g)).
inline EndomorphismSpec compose(const EndomorphismSpec& outer,
                                const EndomorphismSpec& inner) {
  std::map<Letter, Word> images;
  for (const auto& [g, w] : inner.images())
    images.emplace(g, apply_substitution(outer, w));
  return EndomorphismSpec(inner.generators(), std::move(images));
}

struct RelationImage {
  std::size_t equation;
  Word lhs_image;
  Word rhs_image;
  Word lhs_normal_form;
  Word rhs_normal_form;
  bool holds() const { return lhs_normal_form == rhs_normal_form; }
};

struct LiftReport {
  bool lifts = false;
  std::vector<RelationImage> relations;
};

/// phi lifts to an endomorphism iff the image of every defining relation
/// holds, i.e. both images have the same normal form in `system`.
inline LiftReport check_lifts(const RewritingSystem& system,
                              const Presentation& presentation,
                              const EndomorphismSpec& phi,
                              std::size_t fuel = kDefaultFuel) {
  LiftReport report{true, {}};
  for (std::size_t e = 0; e < presentation.equations().size(); ++e) {
    const auto& eq = presentation.equations()[e];
    RelationImage ri{e, apply_substitution(phi, eq.lhs),
                     apply_substitution(phi, eq.rhs), {}, {}};
    ri.lhs_normal_form = reduce(system, ri.lhs_image, fuel);
    ri.rhs_normal_form = reduce(system, ri.rhs_image, fuel);
    report.lifts = report.lifts && ri.holds();
    report.relations.push_back(std::move(ri));
  }
  return report;
}

struct Preimage {
  Letter generator;
  std::optional<Word> word;
};

/// For each generator g, the shortlex-first word u of length <= bound with
/// phi(u) = g in the monoid. If every generator is hit, phi is onto.
inline std::vector<Preimage> surjectivity_evidence(
    const RewritingSystem& system, const Presentation& presentation,
    const EndomorphismSpec& phi, std::size_t bound,
    std::size_t fuel = kDefaultFuel) {
  std::vector<Preimage> out;
  std::vector<std::pair<Letter, Word>> targets;
  for (Letter g : presentation.alphabet()) {
    out.push_back({g, std::nullopt});
    targets.emplace_back(g, reduce(system, Word(std::string(1, g)), fuel));
  }
  std::size_t open = out.size();
  for (const Word& u : detail::words_up_to(presentation.alphabet(), bound)) {
    if (open == 0) break;
    Word image = reduce(system, apply_substitution(phi, u), fuel);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!out[i].word && image == targets[i].second) {
        out[i].word = u;
        --open;
      }
    }
  }
  return out;
}

struct InjectivityWitness {
  Word u;
  Word v;
  Word u_normal_form;
  Word v_normal_form;
  Word image_normal_form;
};

/// Re-checks a witness from scratch: distinct normal forms, equal images.
inline bool validate_witness(const RewritingSystem& system,
                             const EndomorphismSpec& phi,
                             const InjectivityWitness& w,
                             std::size_t fuel = kDefaultFuel) {
  Word nu = reduce(system, w.u, fuel), nv = reduce(system, w.v, fuel);
  Word iu = reduce(system, apply_substitution(phi, w.u), fuel);
  Word iv = reduce(system, apply_substitution(phi, w.v), fuel);
  return nu != nv && iu == iv && nu == w.u_normal_form &&
         nv == w.v_normal_form && iu == w.image_normal_form;
}

/// Sweeps generator words of length <= bound in shortlex order, keeping the
/// first word of each element; returns the first pair of distinct elements
/// whose images coincide (earlier representative, later one).
inline std::optional<InjectivityWitness> find_injectivity_violation(
    const RewritingSystem& system, const Presentation& presentation,
    const EndomorphismSpec& phi, std::size_t bound,
    std::size_t fuel = kDefaultFuel) {
  std::unordered_map<Word, Word> seen_elements;  // normal form -> word
  std::unordered_map<Word, Word> by_image;       // image nf -> word
  for (const Word& u : detail::words_up_to(presentation.alphabet(), bound)) {
    Word nf = reduce(system, u, fuel);
    if (!seen_elements.emplace(nf, u).second) continue;
    Word image = reduce(system, apply_substitution(phi, u), fuel);
    auto [it, fresh] = by_image.emplace(image, u);
    if (!fresh)
      return InjectivityWitness{it->second, u, reduce(system, it->second, fuel),
                                nf, image};
  }
  return std::nullopt;
}

struct ReplayedReduction {
  Word input;
  Word expected;
  Word normal_form;
  std::size_t steps = 0;
  bool matches() const { return normal_form == expected; }
};

struct HopfReport {
  std::vector<Rule> rules;
  bool rules_match_displayed = false;
  std::optional<ReductionOrder> order;
  bool locally_confluent = false;
  std::vector<ReplayedReduction> reductions;
  EndomorphismSpec phi;
  EndomorphismSpec psi;
  LiftReport phi_lift;
  std::vector<Preimage> preimages;
  std::size_t surjectivity_bound = 0;
  LiftReport psi_lift;
  InjectivityWitness derived_witness;
  bool derived_witness_valid = false;
  std::optional<InjectivityWitness> found_witness;
  std::size_t witness_bound = 0;
  bool found_witness_valid = false;
  bool functorial = false;  // phi o psi fixes a and b in M
  std::string conclusion;

  bool surjective() const {
    for (const auto& p : preimages)
      if (!p.word) return false;
    return true;
  }
  bool ok() const {
    return rules_match_displayed && order && locally_confluent &&
           std::all_of(reductions.begin(), reductions.end(),
                       [](const auto& r) { return r.matches(); }) &&
           phi_lift.lifts && surjective() && !psi_lift.lifts &&
           derived_witness_valid && found_witness && found_witness_valid &&
           functorial;
  }
};

/// Mon<a,b : ab^2a^2b^2 = b> with a -> a, b -> bab: builds and certifies the
/// complete system, checks the lift, surjectivity and the failure of the
/// candidate inverse b -> ab^2, and exhibits an injectivity witness.
/// Throws if any computed word differs from the expected one.
inline HopfReport hopf_demo(std::size_t max_witness_bound = 15) {
  const Alphabet ab("ab"), abx("abx");
  auto cls = family::classify(1, 2, 2, 2);
  auto cert = family::certify(cls);
  const RewritingSystem& sys = cert.system;
  const Presentation pres = family::one_relator_presentation(cls.params);
  auto w = [&](std::string_view s) { return parse_word(s, abx); };

  HopfReport report{
      .rules = sys.rules(),
      .order = cert.order,
      .locally_confluent = cert.confluence.joinable,
      .reductions = {},
      .phi = EndomorphismSpec::parse("a=a,b=bab", ab),
      .psi = EndomorphismSpec::parse("a=a,b=ab^2", ab),
      .phi_lift = {},
      .preimages = {},
      .surjectivity_bound = 3,
      .psi_lift = {},
      .derived_witness = {},
      .found_witness = {},
      .conclusion = {},
  };

  const std::vector<Rule> displayed{Rule(w("ax^2b"), w("x")),
                                    Rule(w("ab"), w("x^2")),
                                    Rule(w("x^2bx"), w("b")),
                                    Rule(w("x^2b^2"), w("bxbx"))};
  report.rules_match_displayed =
      sys.size() == displayed.size() &&
      std::all_of(displayed.begin(), displayed.end(), [&](const Rule& r) {
        return std::find(sys.rules().begin(), sys.rules().end(), r) !=
               sys.rules().end();
      });
  if (!report.rules_match_displayed)
    throw Error("hopf_demo: constructed system differs from the expected rules");

  for (auto [in, out] : {std::pair{"abab^2ab", "b"},
                         std::pair{"a(bab)^2a^2(bab)^2", "bx^2"},
                         std::pair{"xab^2axab^2", "x^3bax^3b"}}) {
    auto nf = normal_form(sys, w(in));
    report.reductions.push_back({w(in), w(out), nf.word, nf.steps});
    if (!report.reductions.back().matches())
      throw Error(std::string("hopf_demo: ") + in + " reduced to " +
                  print_word(nf.word) + ", expected " + out);
  }

  report.phi_lift = check_lifts(sys, pres, report.phi);
  report.preimages =
      surjectivity_evidence(sys, pres, report.phi, report.surjectivity_bound);
  report.psi_lift = check_lifts(sys, pres, report.psi);
  const auto& psi_rel = report.psi_lift.relations.at(0);
  if (psi_rel.lhs_normal_form != w("x^3bax^3b") ||
      psi_rel.rhs_normal_form != w("x^2b"))
    throw Error("hopf_demo: b -> ab^2 relation images normalize to " +
                print_word(psi_rel.lhs_normal_form) + " and " +
                print_word(psi_rel.rhs_normal_form));

  // psi(ab^2a^2b^2) and psi(b): phi o psi fixes the generators, so both map
  // to b, yet they differ in M.
  const Word u = apply_substitution(report.psi, w("ab^2a^2b^2"));
  const Word v = apply_substitution(report.psi, w("b"));
  report.derived_witness = {u, v, reduce(sys, u), reduce(sys, v),
                            reduce(sys, apply_substitution(report.phi, u))};
  report.derived_witness_valid =
      validate_witness(sys, report.phi, report.derived_witness);

  for (std::size_t bound = 1; bound <= max_witness_bound; ++bound) {
    report.witness_bound = bound;
    report.found_witness =
        find_injectivity_violation(sys, pres, report.phi, bound);
    if (report.found_witness) break;
  }
  report.found_witness_valid =
      report.found_witness &&
      validate_witness(sys, report.phi, *report.found_witness);

  const auto both = compose(report.phi, report.psi);
  report.functorial = std::all_of(ab.begin(), ab.end(), [&](Letter g) {
    Word gw(std::string(1, g));
    return reduce(sys, apply_substitution(both, gw)) == reduce(sys, gw);
  });

  report.conclusion =
      report.ok()
          ? "a -> a, b -> bab is a surjective, non-injective endomorphism: M is "
            "non-hopfian; by Malcev's theorem (finitely generated residually "
            "finite monoids are hopfian) M is not residually finite"
          : "demonstration incomplete";
  return report;
}

}  // namespace monorel
