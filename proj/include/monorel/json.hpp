#pragma once

// JSON views of reports (nlohmann/json). Every top-level report carries
// "schema": 1.

#include <nlohmann/json.hpp>

#include "monorel/analysis.hpp"
#include "monorel/confluence.hpp"
#include "monorel/endo.hpp"
#include "monorel/family.hpp"
#include "monorel/rewrite.hpp"

namespace monorel::json {

using nlohmann::json;

inline constexpr int kSchema = 1;

inline json word(const Word& w) { return print_word(w); }

inline json rules(const std::vector<Rule>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back({{"lhs", word(r.lhs)}, {"rhs", word(r.rhs)}});
  return out;
}

inline json system(const RewritingSystem& s) {
  json out{{"letters", s.alphabet().letters()},
           {"rules", rules(s.rules())},
           {"certification", to_string(s.certification())}};
  if (s.termination_order()) out["order"] = to_string(*s.termination_order());
  return out;
}

inline json certificate(const EqualityCertificate& c) {
  json chain = json::array(), apps = json::array();
  for (const auto& w : c.chain) chain.push_back(word(w));
  for (const auto& a : c.applications)
    apps.push_back({{"equation", a.equation},
                    {"direction", to_string(a.direction)},
                    {"position", a.position}});
  return {{"chain", chain}, {"applications", apps}, {"d", c.d()}, {"s", c.s()}};
}

inline json oracle(const OracleResult& r) {
  json out{{"verdict", to_string(r.verdict)}, {"nodes", r.nodes}};
  if (r.certificate) out["certificate"] = certificate(*r.certificate);
  return out;
}

inline json identity(const family::IdentityCheck& c) {
  json out{{"label", c.label},
           {"lhs", word(c.lhs)},
           {"rhs", word(c.rhs)},
           {"verdict", to_string(c.verdict)},
           {"bound", c.bound},
           {"nodes", c.nodes}};
  if (c.certificate) {
    out["d"] = c.certificate->d();
    out["s"] = c.certificate->s();
  }
  return out;
}

inline json equivalence(const family::EquivalenceReport& r) {
  json checks = json::array(), rels = json::array();
  for (const auto& c : r.rules) checks.push_back(identity(c));
  for (const auto& c : r.relations)
    rels.push_back({{"equation", c.equation},
                    {"lhs_normal_form", word(c.lhs_normal_form)},
                    {"rhs_normal_form", word(c.rhs_normal_form)},
                    {"agrees", c.agrees}});
  return {{"pass", r.pass()}, {"rules", checks}, {"relations", rels}};
}

inline json confluence(const LocalConfluenceReport& r) {
  json out{{"joinable", r.joinable}, {"pairs_checked", r.pairs_checked}};
  if (r.witness)
    out["witness"] = {{"source", word(r.witness->pair.source)},
                      {"left", word(r.witness->pair.left)},
                      {"right", word(r.witness->pair.right)},
                      {"left_normal_form", word(r.witness->left_normal_form)},
                      {"right_normal_form", word(r.witness->right_normal_form)}};
  return out;
}

inline json completion(const CompletionReport& r) {
  json out{{"schema", kSchema},
           {"outcome", to_string(r.outcome)},
           {"rules", rules(r.rules)},
           {"statistics",
            {{"pairs_processed", r.stats.pairs_processed},
             {"rules_added", r.stats.rules_added},
             {"rules_removed", r.stats.rules_removed},
             {"steps", r.stats.steps}}}};
  if (r.outcome == CompletionReport::Outcome::Completed && r.system)
    out["length_non_increasing"] = is_length_non_increasing(*r.system);
  if (r.unorientable)
    out["unorientable"] = {word(r.unorientable->lhs),
                           word(r.unorientable->rhs)};
  return out;
}

inline json dehn(const DehnSample& d) {
  json out{{"n", d.n},
           {"dehn", d.dehn},
           {"space", d.space},
           {"pairs_examined", d.pairs_examined},
           {"exhaustive", d.exhaustive}};
  if (d.dehn_witness)
    out["dehn_witness"] = {word(d.dehn_witness->x), word(d.dehn_witness->y)};
  if (d.space_witness)
    out["space_witness"] = {word(d.space_witness->x),
                            word(d.space_witness->y)};
  return out;
}

inline json lift(const LiftReport& r) {
  json rels = json::array();
  for (const auto& ri : r.relations)
    rels.push_back({{"equation", ri.equation},
                    {"lhs_image", word(ri.lhs_image)},
                    {"rhs_image", word(ri.rhs_image)},
                    {"lhs_normal_form", word(ri.lhs_normal_form)},
                    {"rhs_normal_form", word(ri.rhs_normal_form)},
                    {"holds", ri.holds()}});
  return {{"lifts", r.lifts}, {"relations", rels}};
}

inline json preimages(const std::vector<Preimage>& ps) {
  json out = json::object();
  for (const auto& p : ps)
    out[std::string(1, p.generator)] =
        p.word ? json(word(*p.word)) : json(nullptr);
  return out;
}

inline json witness(const InjectivityWitness& w) {
  return {{"u", word(w.u)},
          {"v", word(w.v)},
          {"u_normal_form", word(w.u_normal_form)},
          {"v_normal_form", word(w.v_normal_form)},
          {"image_normal_form", word(w.image_normal_form)}};
}

inline json hopf(const HopfReport& r) {
  json reds = json::array();
  for (const auto& red : r.reductions)
    reds.push_back({{"input", word(red.input)},
                    {"normal_form", word(red.normal_form)},
                    {"expected", word(red.expected)},
                    {"steps", red.steps}});
  json out{{"schema", kSchema},
           {"monoid", "Mon<a,b : ab^2a^2b^2 = b>"},
           {"rules", rules(r.rules)},
           {"rules_match_displayed", r.rules_match_displayed},
           {"locally_confluent", r.locally_confluent},
           {"reductions", reds},
           {"phi", to_string(r.phi)},
           {"phi_lift", lift(r.phi_lift)},
           {"surjectivity_bound", r.surjectivity_bound},
           {"preimages", preimages(r.preimages)},
           {"psi", to_string(r.psi)},
           {"psi_lift", lift(r.psi_lift)},
           {"derived_witness", witness(r.derived_witness)},
           {"derived_witness_valid", r.derived_witness_valid},
           {"witness_bound", r.witness_bound},
           {"found_witness_valid", r.found_witness_valid},
           {"phi_psi_fixes_generators", r.functorial},
           {"conclusion", r.conclusion},
           {"ok", r.ok()}};
  if (r.order) out["order"] = to_string(*r.order);
  if (r.found_witness) out["found_witness"] = witness(*r.found_witness);
  return out;
}

}  // namespace monorel::json
