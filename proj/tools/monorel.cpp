// monorel: command-line front end.
//
// Exit status: 0 success, 1 check failure, 2 usage error, 3 budget
// exhaustion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monorel/json.hpp"
#include "monorel/monorel.hpp"

namespace {

using namespace monorel;
using nlohmann::json;
namespace jr = monorel::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : Error {
  using Error::Error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

family::Classification classify_checked(const std::vector<int>& params) {
  if (params.size() != 4) throw UsageError("--params takes four exponents");
  for (int e : params)
    if (e < 1) throw UsageError("exponents must be at least 1");
  return family::classify(params[0], params[1], params[2], params[3]);
}

std::string params_string(const family::FamilyParams& P) {
  std::ostringstream os;
  os << "(" << P.alpha << "," << P.beta << "," << P.gamma << "," << P.delta
     << ")";
  if (P.overlapping)
    os << " p=" << P.p << " q=" << P.q << " r=" << P.r << " s=" << P.s
       << " k=" << P.k;
  return os.str();
}

json params_json(const family::Classification& c) {
  const auto& P = c.params;
  json j{{"alpha", P.alpha}, {"beta", P.beta}, {"gamma", P.gamma},
         {"delta", P.delta}, {"case", family::to_string(c.tag.variant)}};
  if (P.overlapping) {
    j["p"] = P.p;
    j["q"] = P.q;
    j["r"] = P.r;
    j["s"] = P.s;
    j["k"] = P.k;
  }
  if (c.tag.variant == family::Variant::Case4)
    j["extra_rule"] = c.tag.extra_rule;
  return j;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::vector<int> params;
  bool verify = false;
  bool as_json = false;
  std::string out;
  std::size_t fuel = kDefaultFuel;
  std::size_t nodes = kDefaultNodeBudget;
};

int cmd_build(const BuildArgs& a) {
  auto cls = classify_checked(a.params);
  RewritingSystem sys = family::build_system(cls);
  json report{{"schema", jr::kSchema},
              {"command", "build"},
              {"params", params_json(cls)},
              {"budgets", {{"fuel", a.fuel}, {"oracle_nodes", a.nodes}}}};
  std::ostringstream text;
  text << "classification: " << family::to_string(cls.tag.variant) << " "
       << params_string(cls.params) << "\n";

  int status = kOk;
  std::optional<ReductionOrder> order;
  if (a.verify) {
    auto cert = family::certify(cls, std::nullopt, a.fuel);
    sys = cert.system;
    order = cert.order;
    report["confluence"] = jr::confluence(cert.confluence);
    text << "local confluence: "
         << (cert.confluence.joinable ? "PASS" : "FAIL") << " ("
         << cert.confluence.pairs_checked << " critical pairs)\n";
    if (!cert.confluence.joinable) status = kCheckFailed;
    if (cert.empirical) {
      const auto& ev = *cert.empirical;
      report["empirical_termination"] = {{"samples", ev.samples},
                                         {"max_length", ev.max_length},
                                         {"fuel", ev.fuel},
                                         {"halted", ev.halted},
                                         {"max_steps_seen", ev.max_steps_seen}};
      text << "termination: unverified (empirical: " << ev.halted << "/"
           << ev.samples << " random words halted within " << ev.fuel
           << " steps)\n";
      if (!ev.all_halted()) status = kCheckFailed;
    } else if (order) {
      text << "termination: PASS (" << to_string(*order) << ")\n";
    } else {
      text << "termination: FAIL (no weighted shortlex order within caps)\n";
      status = kCheckFailed;
    }
    DeepeningOptions search;
    search.node_budget = a.nodes;
    std::optional<Word> xdef;
    if (family::uses_x(cls.tag.variant)) xdef = family::x_definition(cls.params);
    auto eq = family::verify_presentation_equivalence(
        family::one_relator_presentation(cls.params), sys, xdef, search, a.fuel);
    report["equivalence"] = jr::equivalence(eq);
    text << "presentation equivalence: " << (eq.pass() ? "PASS" : "FAIL")
         << "\n";
    for (const auto& c : eq.rules) {
      text << "  " << c.label << ": " << to_string(c.verdict);
      if (c.certificate)
        text << " (d=" << c.certificate->d() << ", s=" << c.certificate->s()
             << ")";
      text << "\n";
    }
    if (!eq.pass()) status = eq.inconclusive() ? kBudget : kCheckFailed;
    if (cls.tag.variant == family::Variant::Case4) {
      auto chain = family::check_derivation_chain(cls.params, search);
      json jc = json::array();
      text << "derivation chain:\n";
      for (const auto& c : chain) {
        jc.push_back(jr::identity(c));
        text << "  " << c.label << ": " << to_string(c.verdict) << "\n";
        if (c.verdict != OracleVerdict::Equal && status == kOk)
          status = c.verdict == OracleVerdict::Inconclusive ? kBudget
                                                            : kCheckFailed;
      }
      report["derivation_chain"] = jc;
    }
    text << "verification: " << (status == kOk ? "PASS" : "FAIL") << "\n";
    report["verification"] = status == kOk ? "PASS" : "FAIL";
  }
  report["system"] = jr::system(sys);
  text << "system (" << sys.size() << " rules, "
       << to_string(sys.certification()) << "):\n";
  for (const auto& r : sys.rules()) text << "  " << to_string(r) << "\n";

  if (!a.out.empty()) emit(io::write_system(sys, order), a.out);
  std::cout << (a.as_json ? dump(report) : text.str());
  return status;
}

// ---------------------------------------------------------------- grid

struct GridRunConfig {
  std::vector<int> range{1, 4};
  std::vector<int> alpha, beta, gamma, delta;  // override range per exponent
  std::vector<std::string> checks{"completeness"};
  std::string out;
  bool as_json = false;
  bool timings = false;
  std::size_t fuel = kDefaultFuel;
  std::size_t nodes = kDefaultNodeBudget;
  unsigned max_weight = 8;
  std::size_t kb_max_rules = 200;
  std::size_t kb_max_steps = 20'000;
  std::size_t dehn_n = 6;
};

std::pair<int, int> range_of(const std::vector<int>& specific,
                             const std::vector<int>& fallback) {
  const auto& r = specific.empty() ? fallback : specific;
  if (r.size() != 2 || r[0] < 1 || r[1] < r[0])
    throw UsageError("ranges are LO HI with 1 <= LO <= HI");
  return {r[0], r[1]};
}

int cmd_grid(const GridRunConfig& cfg) {
  auto ra = range_of(cfg.alpha, cfg.range), rb = range_of(cfg.beta, cfg.range),
       rg = range_of(cfg.gamma, cfg.range), rd = range_of(cfg.delta, cfg.range);
  bool want_complete = false, want_equiv = false, want_probe = false,
       want_dehn = false;
  for (const auto& c : cfg.checks) {
    if (c == "completeness") want_complete = true;
    else if (c == "equivalence") want_equiv = true;
    else if (c == "probe") want_probe = true;
    else if (c == "dehn") want_dehn = true;
    else throw UsageError("unknown check '" + c + "'");
  }
  if (cfg.checks.empty()) throw UsageError("no checks selected");

  json rows = json::array();
  std::ostringstream text;
  text << "tuple      case       cert               conf order  equiv  probe"
          "             lni  dehn/space\n";
  bool hard_failure = false;
  for (int al = ra.first; al <= ra.second; ++al)
    for (int be = rb.first; be <= rb.second; ++be)
      for (int ga = rg.first; ga <= rg.second; ++ga)
        for (int de = rd.first; de <= rd.second; ++de) {
          auto t0 = std::chrono::steady_clock::now();
          auto cls = family::classify(al, be, ga, de);
          json row{{"params", params_json(cls)}};
          std::string cert_s = "-", conf_s = "-", order_s = "-", equiv_s = "-",
                      probe_s = "-", lni_s = "-", dehn_s = "-";
          RewritingSystem sys = family::build_system(cls);
          row["rules"] = jr::rules(sys.rules());
          if (want_complete) {
            try {
              WeightCaps caps = family::default_weight_caps(cls.params, sys);
              caps.max_weight = cfg.max_weight;
              auto cert = family::certify(cls, caps, cfg.fuel);
              sys = cert.system;
              row["certification"] = to_string(sys.certification());
              row["locally_confluent"] = cert.confluence.joinable;
              conf_s = cert.confluence.joinable ? "PASS" : "FAIL";
              if (!cert.confluence.joinable) {
                hard_failure = true;
                row["confluence"] = jr::confluence(cert.confluence);
              }
              if (cert.order) {
                row["order"] = to_string(*cert.order);
                order_s = "found";
              } else if (cert.empirical) {
                row["empirical_termination_halted"] = cert.empirical->halted;
                row["empirical_termination_samples"] = cert.empirical->samples;
                // Informational: does some shortlex order exist at all?
                bool exists = find_termination_order(sys, caps).has_value();
                row["shortlex_order_exists"] = exists;
                order_s = exists ? "emp*" : "emp";
              } else {
                row["order"] = nullptr;
                order_s = "none";
              }
              cert_s = to_string(sys.certification());
            } catch (const FuelExhausted&) {
              row["certification"] = "fuel-exhausted";
              cert_s = "fuel-exhausted";
            }
          }
          if (want_equiv) {
            DeepeningOptions search;
            search.node_budget = cfg.nodes;
            std::optional<Word> xdef;
            if (family::uses_x(cls.tag.variant))
              xdef = family::x_definition(cls.params);
            try {
              auto eq = family::verify_presentation_equivalence(
                  family::one_relator_presentation(cls.params), sys, xdef,
                  search, cfg.fuel);
              row["equivalence"] = eq.pass()           ? "PASS"
                                   : eq.inconclusive() ? "inconclusive"
                                                       : "FAIL";
              equiv_s = row["equivalence"].get<std::string>();
              for (const auto& r : eq.relations)
                if (!r.agrees) hard_failure = true;
            } catch (const FuelExhausted&) {
              row["equivalence"] = "fuel-exhausted";
              equiv_s = "fuel";
            }
          }
          if (want_probe) {
            Presentation pres = family::one_relator_presentation(cls.params);
            if (family::uses_x(cls.tag.variant))
              pres = family::tietze_presentation(cls.params);
            auto kb = knuth_bendix(pres,
                                   ReductionOrder::shortlex(pres.alphabet()),
                                   {cfg.kb_max_rules, cfg.kb_max_steps});
            row["probe"] = {{"outcome", to_string(kb.outcome)},
                            {"rules", kb.rules.size()},
                            {"steps", kb.stats.steps}};
            probe_s = std::string(to_string(kb.outcome)) + "/" +
                      std::to_string(kb.rules.size());
            if (kb.outcome == CompletionReport::Outcome::Completed) {
              bool lni = is_length_non_increasing(*kb.system);
              row["probe"]["length_non_increasing"] = lni;
              lni_s = lni ? "yes" : "no";
            }
          }
          if (want_dehn) {
            DehnOptions opts;
            opts.node_budget = cfg.nodes;
            auto d = dehn_sample(family::one_relator_presentation(cls.params),
                                 cfg.dehn_n, opts);
            row["dehn"] = jr::dehn(d);
            dehn_s = std::to_string(d.dehn) + "/" + std::to_string(d.space);
          }
          if (cfg.timings)
            row["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
          rows.push_back(row);
          char line[200];
          std::snprintf(line, sizeof line,
                        "%d,%d,%d,%d    %-10s %-18s %-4s %-6s %-6s %-17s %-4s %s\n",
                        al, be, ga, de, family::to_string(cls.tag.variant),
                        cert_s.c_str(), conf_s.c_str(), order_s.c_str(),
                        equiv_s.c_str(), probe_s.c_str(), lni_s.c_str(),
                        dehn_s.c_str());
          text << line;
        }
  json report{{"schema", jr::kSchema},
              {"command", "grid"},
              {"checks", cfg.checks},
              {"budgets",
               {{"fuel", cfg.fuel},
                {"oracle_nodes", cfg.nodes},
                {"max_weight", cfg.max_weight},
                {"kb_max_rules", cfg.kb_max_rules},
                {"kb_max_steps", cfg.kb_max_steps},
                {"dehn_n", cfg.dehn_n}}},
              {"rows", rows},
              {"hard_failure", hard_failure}};
  text << rows.size() << " rows; "
       << (hard_failure ? "HARD FAILURE" : "no hard failures") << "\n";
  emit(cfg.as_json ? dump(report) : text.str(), cfg.out);
  return hard_failure ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- complete

struct CompleteArgs {
  std::string presentation;
  std::string order;
  std::size_t max_rules = 500;
  std::size_t max_steps = 100'000;
  bool as_json = false;
  std::string out;
};

int cmd_complete(const CompleteArgs& a) {
  auto pres = io::read_presentation_file(a.presentation);
  ReductionOrder order = a.order.empty()
                             ? ReductionOrder::shortlex(pres.alphabet())
                             : io::parse_order(a.order, pres.alphabet());
  auto report = knuth_bendix(pres, order, {a.max_rules, a.max_steps});
  json j = jr::completion(report);
  j["order"] = to_string(order);
  j["limits"] = {{"max_rules", a.max_rules}, {"max_steps", a.max_steps}};
  std::ostringstream text;
  text << "outcome: " << to_string(report.outcome) << "\n"
       << "order: " << to_string(order) << "\n"
       << "pairs processed: " << report.stats.pairs_processed
       << ", rules added: " << report.stats.rules_added
       << ", removed: " << report.stats.rules_removed << "\n";
  if (report.outcome == CompletionReport::Outcome::Completed)
    text << "length-non-increasing: "
         << (is_length_non_increasing(*report.system) ? "yes" : "no") << "\n";
  text << "rules (" << report.rules.size() << "):\n";
  for (const auto& r : report.rules) text << "  " << to_string(r) << "\n";
  if (!a.out.empty() && report.system)
    emit(io::write_system(*report.system, order), a.out);
  std::cout << (a.as_json ? dump(j) : text.str());
  switch (report.outcome) {
    case CompletionReport::Outcome::Completed: return kOk;
    case CompletionReport::Outcome::LimitExceeded: return kBudget;
    case CompletionReport::Outcome::Unorientable: return kCheckFailed;
  }
  return kCheckFailed;
}

// ---------------------------------------------------------------- nf

struct NfArgs {
  std::string system;
  std::string word;
  std::size_t fuel = kDefaultFuel;
  bool trace = false;
  bool as_json = false;
};

int cmd_nf(const NfArgs& a) {
  auto file = io::read_system_file(a.system);
  Word w = parse_word(a.word, file.system.alphabet());
  auto nf = normal_form(file.system, w, a.fuel);
  if (a.as_json) {
    json steps = json::array();
    for (const auto& s : nf.trace.steps)
      steps.push_back({{"rule", s.rule},
                       {"position", s.position},
                       {"word", print_word(s.result)}});
    json j{{"schema", jr::kSchema},
           {"input", print_word(w)},
           {"normal_form", print_word(nf.word)},
           {"steps", nf.steps},
           {"fuel", a.fuel}};
    if (a.trace) j["trace"] = steps;
    std::cout << dump(j);
    return kOk;
  }
  if (a.trace) {
    std::cout << print_word(w) << "\n";
    for (const auto& s : nf.trace.steps)
      std::cout << "  -> " << print_word(s.result) << "   [rule "
                << s.rule + 1 << " at " << s.position << "]\n";
  }
  std::cout << print_word(nf.word) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- equal

struct EqualArgs {
  std::string presentation;
  std::string u, v;
  std::size_t bound = 0;
  std::size_t nodes = kDefaultNodeBudget;
  std::string mode = "steps";
  bool as_json = false;
};

int cmd_equal(const EqualArgs& a) {
  auto pres = io::read_presentation_file(a.presentation);
  Word u = parse_word(a.u, pres.alphabet()), v = parse_word(a.v, pres.alphabet());
  if (a.bound < std::max(u.size(), v.size()))
    throw UsageError("--bound must be at least the length of both words");
  if (a.mode != "steps" && a.mode != "space")
    throw UsageError("--mode is steps or space");
  auto r = equal_in_monoid(
      pres, u, v, a.bound,
      {a.nodes, a.mode == "space" ? SearchMode::MinSpace : SearchMode::MinSteps});
  if (a.as_json) {
    json j = jr::oracle(r);
    j["schema"] = jr::kSchema;
    j["u"] = print_word(u);
    j["v"] = print_word(v);
    j["bound"] = a.bound;
    j["node_budget"] = a.nodes;
    j["mode"] = a.mode;
    std::cout << dump(j);
  } else {
    std::cout << to_string(r.verdict) << "\n";
    if (r.certificate) {
      std::cout << "d = " << r.certificate->d() << ", s = "
                << r.certificate->s() << "\n";
      for (std::size_t i = 0; i < r.certificate->chain.size(); ++i) {
        std::cout << "  " << print_word(r.certificate->chain[i]);
        if (i < r.certificate->applications.size()) {
          const auto& app = r.certificate->applications[i];
          std::cout << "   [relation " << app.equation + 1 << " "
                    << to_string(app.direction) << " at " << app.position
                    << "]";
        }
        std::cout << "\n";
      }
    }
  }
  return r.verdict == OracleVerdict::Inconclusive ? kBudget : kOk;
}

// ---------------------------------------------------------------- dehn

struct DehnArgs {
  std::string presentation;
  std::size_t n = 0;
  std::size_t from = 1;
  std::string mode = "exhaustive";
  std::size_t slack = 0;
  std::size_t nodes = kDefaultNodeBudget;
  std::uint64_t seed = 1;
  bool as_json = false;
};

int cmd_dehn(const DehnArgs& a) {
  auto pres = io::read_presentation_file(a.presentation);
  DehnOptions opts;
  opts.slack = a.slack;
  opts.node_budget = a.nodes;
  opts.seed = a.seed;
  if (a.mode.rfind("random:", 0) == 0) {
    opts.mode = DehnOptions::Mode::Random;
    try {
      opts.random_count = std::stoul(a.mode.substr(7));
    } catch (const std::exception&) {
      throw UsageError("--mode random:COUNT needs a number");
    }
  } else if (a.mode != "exhaustive") {
    throw UsageError("--mode is exhaustive or random:COUNT");
  }
  if (a.n < 1 || a.from < 1 || a.from > a.n)
    throw UsageError("need 1 <= --from <= --n");
  auto table = dehn_table(pres, a.from, a.n, opts);
  const std::size_t slack = a.slack ? a.slack : 2 * pres.max_side_length();
  bool complete = true;
  json rows = json::array();
  std::ostringstream text;
  text << "n   dehn  space  pairs  exhaustive\n";
  for (const auto& s : table) {
    rows.push_back(jr::dehn(s));
    char line[120];
    std::snprintf(line, sizeof line, "%-3zu %-5zu %-6zu %-6zu %s\n", s.n, s.dehn,
                  s.space, s.pairs_examined, s.exhaustive ? "yes" : "no");
    text << line;
    complete = complete && s.exhaustive;
  }
  json j{{"schema", jr::kSchema},
         {"mode", a.mode},
         {"length_cap", a.n + slack},
         {"node_budget", a.nodes},
         {"table", rows}};
  std::cout << (a.as_json ? dump(j) : text.str());
  return opts.mode == DehnOptions::Mode::Exhaustive && !complete ? kBudget : kOk;
}

// ---------------------------------------------------------------- endo

struct EndoArgs {
  std::vector<int> params;
  std::string map;
  std::size_t surjective_bound = 3;
  std::size_t noninjective_bound = 10;
  bool as_json = false;
};

int cmd_endo(const EndoArgs& a) {
  auto cls = classify_checked(a.params);
  auto cert = family::certify(cls);
  if (cert.system.certification() != Certification::Complete) {
    std::cerr << "system for " << params_string(cls.params)
              << " is not certified complete ("
              << to_string(cert.system.certification()) << ")\n";
    return kCheckFailed;
  }
  const auto pres = family::one_relator_presentation(cls.params);
  const auto phi = EndomorphismSpec::parse(a.map, pres.alphabet());
  auto lift = check_lifts(cert.system, pres, phi);
  json j{{"schema", jr::kSchema},
         {"params", params_json(cls)},
         {"system", jr::system(cert.system)},
         {"map", to_string(phi)},
         {"lift", jr::lift(lift)},
         {"surjective_bound", a.surjective_bound},
         {"noninjective_bound", a.noninjective_bound}};
  std::ostringstream text;
  text << "map " << to_string(phi) << " on " << params_string(cls.params)
       << "\n";
  for (const auto& ri : lift.relations)
    text << "  relation " << ri.equation + 1 << ": "
         << print_word(ri.lhs_normal_form) << " vs "
         << print_word(ri.rhs_normal_form) << "\n";
  text << "lifts: " << (lift.lifts ? "yes" : "no") << "\n";
  if (lift.lifts) {
    auto pre = surjectivity_evidence(cert.system, pres, phi, a.surjective_bound);
    j["preimages"] = jr::preimages(pre);
    for (const auto& p : pre)
      text << "  preimage of " << p.generator << ": "
           << (p.word ? print_word(*p.word) : "(none within bound)") << "\n";
    auto wit = find_injectivity_violation(cert.system, pres, phi,
                                          a.noninjective_bound);
    if (wit) {
      j["injectivity_witness"] = jr::witness(*wit);
      j["witness_valid"] = validate_witness(cert.system, phi, *wit);
      text << "not injective: " << print_word(wit->u) << " and "
           << print_word(wit->v) << " both map to "
           << print_word(wit->image_normal_form) << "\n";
    } else {
      j["injectivity_witness"] = nullptr;
      text << "no injectivity violation within bound "
           << a.noninjective_bound << "\n";
    }
  }
  std::cout << (a.as_json ? dump(j) : text.str());
  return lift.lifts ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- hopf-demo

int cmd_hopf_demo(bool as_json) {
  auto r = hopf_demo();
  if (as_json) {
    std::cout << dump(jr::hopf(r));
    return r.ok() ? kOk : kCheckFailed;
  }
  std::cout << "M = Mon<a,b : ab^2a^2b^2 = b>, complete system:\n";
  for (const auto& rule : r.rules) std::cout << "  " << to_string(rule) << "\n";
  if (r.order) std::cout << "  terminating under " << to_string(*r.order) << "\n";
  std::cout << "  locally confluent: " << (r.locally_confluent ? "yes" : "no")
            << "\n";
  for (const auto& red : r.reductions)
    std::cout << "  " << print_word(red.input) << " ->* "
              << print_word(red.normal_form) << " (" << red.steps
              << " steps)\n";
  std::cout << "phi: " << to_string(r.phi)
            << "  lifts: " << (r.phi_lift.lifts ? "yes" : "no") << "\n";
  for (const auto& p : r.preimages)
    std::cout << "  preimage of " << p.generator << ": "
              << (p.word ? print_word(*p.word) : "(none)") << "\n";
  const auto& rel = r.psi_lift.relations.at(0);
  std::cout << "psi: " << to_string(r.psi)
            << "  lifts: " << (r.psi_lift.lifts ? "yes" : "no") << " ("
            << print_word(rel.lhs_normal_form) << " vs "
            << print_word(rel.rhs_normal_form) << ")\n";
  std::cout << "derived witness: " << print_word(r.derived_witness.u) << ", "
            << print_word(r.derived_witness.v) << " -> "
            << print_word(r.derived_witness.image_normal_form) << "  "
            << (r.derived_witness_valid ? "valid" : "INVALID") << "\n";
  if (r.found_witness)
    std::cout << "shortest-sweep witness (bound " << r.witness_bound
              << "): " << print_word(r.found_witness->u) << " ["
              << print_word(r.found_witness->u_normal_form) << "], "
              << print_word(r.found_witness->v) << " ["
              << print_word(r.found_witness->v_normal_form) << "] -> "
              << print_word(r.found_witness->image_normal_form) << "  "
              << (r.found_witness_valid ? "valid" : "INVALID") << "\n";
  std::cout << r.conclusion << "\n";
  return r.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite complete rewriting systems for Mon<a,b : a^i b^j a^k b^l = b>"};
  app.require_subcommand(1);
  app.footer(
      "Exit status: 0 success, 1 check failure, 2 usage error, 3 budget "
      "exhaustion.\nDefaults: fuel 1000000 steps, oracle 1000000 nodes, "
      "oracle slack 2*|relator| doubled twice.");
  std::function<int()> run;

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Classify exponents and emit the complete system");
  b->add_option("--params", build.params, "alpha beta gamma delta")
      ->expected(4)
      ->required();
  b->add_flag("--verify", build.verify,
              "Certify confluence/termination and presentation equivalence");
  b->add_option("--out", build.out, "Write the system file here");
  b->add_option("--fuel", build.fuel, "Normalization step budget")
      ->capture_default_str();
  b->add_option("--nodes", build.nodes, "Oracle node budget")
      ->capture_default_str();
  b->add_flag("--json", build.as_json);
  b->callback([&] { run = [&] { return cmd_build(build); }; });

  GridRunConfig grid;
  auto* g = app.add_subcommand("grid", "Run checks over a grid of exponents");
  g->add_option("--range", grid.range, "LO HI for every exponent")
      ->expected(2)
      ->capture_default_str();
  g->add_option("--alpha", grid.alpha, "LO HI")->expected(2);
  g->add_option("--beta", grid.beta, "LO HI")->expected(2);
  g->add_option("--gamma", grid.gamma, "LO HI")->expected(2);
  g->add_option("--delta", grid.delta, "LO HI")->expected(2);
  g->add_option("--checks", grid.checks,
                "completeness, equivalence, probe, dehn")
      ->delimiter(',')
      ->capture_default_str();
  g->add_option("--out", grid.out, "Write the table here");
  g->add_flag("--json", grid.as_json);
  g->add_flag("--timings", grid.timings, "Include per-row wall time");
  g->add_option("--fuel", grid.fuel)->capture_default_str();
  g->add_option("--nodes", grid.nodes)->capture_default_str();
  g->add_option("--max-weight", grid.max_weight)->capture_default_str();
  g->add_option("--kb-max-rules", grid.kb_max_rules)->capture_default_str();
  g->add_option("--kb-max-steps", grid.kb_max_steps)->capture_default_str();
  g->add_option("--dehn-n", grid.dehn_n)->capture_default_str();
  g->callback([&] { run = [&] { return cmd_grid(grid); }; });

  CompleteArgs complete;
  auto* c = app.add_subcommand("complete", "Knuth-Bendix completion of a presentation");
  c->add_option("--presentation", complete.presentation)->required();
  c->add_option("--order", complete.order,
                "e.g. \"weights: a=1 b=1; precedence: a>b\" (default shortlex)");
  c->add_option("--max-rules", complete.max_rules)->capture_default_str();
  c->add_option("--max-steps", complete.max_steps)->capture_default_str();
  c->add_option("--out", complete.out, "Write the completed system here");
  c->add_flag("--json", complete.as_json);
  c->callback([&] { run = [&] { return cmd_complete(complete); }; });

  NfArgs nf;
  auto* n = app.add_subcommand("nf", "Normal form of a word");
  n->add_option("--system", nf.system)->required();
  n->add_option("word", nf.word)->required();
  n->add_option("--fuel", nf.fuel)->capture_default_str();
  n->add_flag("--trace", nf.trace);
  n->add_flag("--json", nf.as_json);
  n->callback([&] { run = [&] { return cmd_nf(nf); }; });

  EqualArgs equal;
  auto* e = app.add_subcommand("equal", "Bounded equality search in a presentation");
  e->add_option("--presentation", equal.presentation)->required();
  e->add_option("u", equal.u)->required();
  e->add_option("v", equal.v)->required();
  e->add_option("--bound", equal.bound, "Maximum intermediate word length")
      ->required();
  e->add_option("--nodes", equal.nodes)->capture_default_str();
  e->add_option("--mode", equal.mode, "steps or space")->capture_default_str();
  e->add_flag("--json", equal.as_json);
  e->callback([&] { run = [&] { return cmd_equal(equal); }; });

  DehnArgs dehn;
  auto* d = app.add_subcommand("dehn", "Empirical Dehn and space functions");
  d->add_option("--presentation", dehn.presentation)->required();
  d->add_option("--n", dehn.n)->required();
  d->add_option("--from", dehn.from)->capture_default_str();
  d->add_option("--mode", dehn.mode, "exhaustive or random:COUNT")
      ->capture_default_str();
  d->add_option("--slack", dehn.slack, "Length slack (default 2*|relator|)");
  d->add_option("--nodes", dehn.nodes)->capture_default_str();
  d->add_option("--seed", dehn.seed)->capture_default_str();
  d->add_flag("--json", dehn.as_json);
  d->callback([&] { run = [&] { return cmd_dehn(dehn); }; });

  EndoArgs endo;
  auto* en = app.add_subcommand("endo", "Check an endomorphism given on generators");
  en->add_option("--params", endo.params, "alpha beta gamma delta")
      ->expected(4)
      ->required();
  en->add_option("--map", endo.map, "e.g. \"a=a,b=bab\"")->required();
  en->add_option("--surjective-bound", endo.surjective_bound)
      ->capture_default_str();
  en->add_option("--noninjective-bound", endo.noninjective_bound)
      ->capture_default_str();
  en->add_flag("--json", endo.as_json);
  en->callback([&] { run = [&] { return cmd_endo(endo); }; });

  bool hopf_json = false;
  auto* h = app.add_subcommand("hopf-demo", "The non-hopfian example end to end");
  h->add_flag("--json", hopf_json);
  h->callback([&] { run = [&] { return cmd_hopf_demo(hopf_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const io::IoError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const ParseError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const FuelExhausted& ex) {
    std::cerr << "budget exhausted: " << ex.what() << "\n";
    return kBudget;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kCheckFailed;
  }
}
