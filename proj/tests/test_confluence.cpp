#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "monorel/confluence.hpp"
#include "monorel/family.hpp"
#include "support/oracles.hpp"

using namespace monorel;

namespace {

std::set<std::tuple<std::string, std::string, std::string>> library_pairs(
    const RewritingSystem& sys) {
  std::set<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& cp : critical_pairs(sys)) {
    auto l = cp.left.str(), r = cp.right.str();
    if (l > r) std::swap(l, r);
    out.emplace(cp.source.str(), l, r);
  }
  return out;
}

}  // namespace

TEST_CASE("abab -> b overlaps itself once", "[confluence]") {
  RewritingSystem sys(Alphabet("ab"), {Rule(Word("abab"), Word("b"))});
  auto pairs = critical_pairs(sys);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].source.str() == "ababab");
  CHECK(pairs[0].left.str() == "bab");
  CHECK(pairs[0].right.str() == "abb");
  auto report = check_local_confluence(sys);
  CHECK_FALSE(report.joinable);
  REQUIRE(report.witness);
  CHECK(report.witness->left_normal_form.str() == "bab");
  CHECK(report.witness->right_normal_form.str() == "abb");
  CHECK(report.system.certification() == Certification::Uncertified);
}

TEST_CASE("containment pairs and identical left-hand sides", "[confluence]") {
  RewritingSystem sys(Alphabet("ab"),
                      {Rule(Word("aba"), Word("b")), Rule(Word("b"), Word("a"))});
  auto pairs = critical_pairs(sys);
  // aba contains b once; aba overlaps itself at a.
  CHECK(pairs.size() == 2);
  RewritingSystem twins(Alphabet("ab"),
                        {Rule(Word("ab"), Word("b")), Rule(Word("ab"), Word("a"))});
  auto twin_pairs = critical_pairs(twins);
  REQUIRE(twin_pairs.size() == 1);
  CHECK(twin_pairs[0].first == 0);
  CHECK(twin_pairs[0].overlap.kind == Overlap::Kind::Containment);
}

TEST_CASE("critical pairs agree with the placement oracle", "[confluence]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 4), coin(0, 1);
  auto rand_word = [&](int n) {
    std::string s(static_cast<std::size_t>(n), 'a');
    for (auto& c : s) c = coin(rng) ? 'b' : 'a';
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rule> rules;
    oracle::Rules plain;
    std::set<std::string> lhs_seen;
    for (int i = 0; i < 3; ++i) {
      std::string l = rand_word(len(rng)), r = rand_word(len(rng) - 1);
      if (l == r || !lhs_seen.insert(l + "|" + r).second) continue;
      rules.emplace_back(Word(l), Word(r));
      plain.emplace_back(l, r);
    }
    RewritingSystem sys(Alphabet("ab"), rules);
    CHECK(library_pairs(sys) == oracle::critical_pairs(plain));
  }
}

TEST_CASE("the (1,2,2,2) system is locally confluent", "[confluence]") {
  auto sys = family::build_system(family::classify(1, 2, 2, 2));
  auto report = check_local_confluence(sys);
  CHECK(report.joinable);
  CHECK(report.pairs_checked == critical_pairs(sys).size());
  CHECK(report.system.certification() == Certification::LocallyConfluent);
  CHECK(is_length_non_increasing(
      RewritingSystem(Alphabet("ab"), {Rule(Word("abab"), Word("b"))})));
  CHECK(is_length_non_increasing(sys));
  CHECK_FALSE(is_length_non_increasing(
      RewritingSystem(Alphabet("ab"), {Rule(Word("a"), Word("bb"))})));
}

TEST_CASE("completion of abab = b under shortlex", "[confluence][kb]") {
  Presentation pres(Alphabet("ab"), {{Word("abab"), Word("b")}});
  auto report = knuth_bendix(pres, ReductionOrder::shortlex(pres.alphabet()));
  REQUIRE(report.outcome == CompletionReport::Outcome::Completed);
  REQUIRE(report.rules.size() == 2);
  CHECK(report.rules[0] == Rule(Word("abab"), Word("b")));
  CHECK(report.rules[1] == Rule(Word("abb"), Word("bab")));
  REQUIRE(report.system);
  CHECK(report.system->certification() == Certification::Complete);
  CHECK(is_length_non_increasing(*report.system));
}

TEST_CASE("completion stops at its limits", "[confluence][kb]") {
  Presentation pres(Alphabet("ab"), {{Word("abab"), Word("b")}});
  auto order = ReductionOrder::shortlex(pres.alphabet());
  auto capped = knuth_bendix(pres, order, {1, 1000});
  CHECK(capped.outcome == CompletionReport::Outcome::LimitExceeded);
  CHECK(capped.rules.size() == 2);
  auto short_run = knuth_bendix(pres, order, {100, 1});
  CHECK(short_run.outcome == CompletionReport::Outcome::LimitExceeded);
  CHECK_THROWS_AS(knuth_bendix(pres, order, {0, 10}), Error);
  CHECK_THROWS_AS(
      knuth_bendix(pres, ReductionOrder::shortlex(Alphabet("abx"))), Error);
}

TEST_CASE("completion reproduces a known complete system", "[confluence][kb]") {
  // Mon<a,b : ab = ba> completes to the single commutation rule.
  Presentation comm(Alphabet("ab"), {{Word("ab"), Word("ba")}});
  auto report = knuth_bendix(comm, ReductionOrder::shortlex(comm.alphabet()));
  REQUIRE(report.outcome == CompletionReport::Outcome::Completed);
  REQUIRE(report.rules.size() == 1);
  CHECK(report.rules[0] == Rule(Word("ab"), Word("ba")));
}
