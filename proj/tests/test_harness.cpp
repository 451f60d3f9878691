#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "lamlab/harness.hpp"
#include "lamlab/json_io.hpp"
#include "lamlab/neededness.hpp"
#include "lamlab/derivation_dyn.hpp"

using namespace lamlab;

namespace {

Term T(const std::string& src) { return parse_term(src); }

Derivation kio_typed() {
  Derivation k = mk_abs("x", mk_abs("y", mk_ax("x", answer())));
  Derivation ki = mk_app(k, {mk_val(T("\\z. z"))}, T("\\z. z"));
  return mk_app(ki, {}, T("(\\x. x x) (\\x. x x)"));
}

}  // namespace

TEST_CASE("corpus: zoo, determinism, closedness") {
  CorpusSpec zoo_only;
  zoo_only.count = 0;
  std::vector<Term> zoo = generate_corpus(zoo_only);
  std::vector<std::string> expected = {
      "\\x. x",
      "\\x. \\y. x",
      "(\\x. x x) (\\x. x x)",
      "\\x. x x",
      "(\\x. \\y. x) (\\z. z) ((\\x. x x) (\\x. x x))",
      "(\\y. \\x. (\\z. z) x ((\\z. z) (\\z. z))) ((\\z. z) (\\z. z))",
      "(\\x1. (\\z. z) (x1 (\\z. z))) (\\y. (\\z. z) y)",
  };
  REQUIRE(zoo.size() == expected.size());
  for (std::size_t i = 0; i < zoo.size(); ++i) CHECK(print_term(zoo[i]) == expected[i]);

  CorpusSpec spec;
  spec.seed = 7;
  spec.count = 60;
  std::vector<Term> a = generate_corpus(spec);
  std::vector<Term> b = generate_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(print_term(a[i]) == print_term(b[i]));

  CorpusSpec closed;
  closed.seed = 3;
  closed.max_size = 5;
  closed.count = 300;
  closed.closed_only = true;
  closed.include_zoo = false;
  for (const Term& t : generate_corpus(closed)) {
    CHECK(free_vars(t).empty());
    CHECK(term_size(t) <= 5);
  }
}

TEST_CASE("equivalence checker verdicts") {
  EquivalenceRow kio = check_equivalences(T("(\\x. \\y. x) (\\z. z) ((\\x. x x) (\\x. x x))"), 100);
  CHECK(kio.typable == Verdict::Yes);
  CHECK(kio.wn_name == Verdict::Yes);
  CHECK(kio.wn_whnd == Verdict::Yes);
  CHECK(kio.wn_need == Verdict::Yes);
  CHECK(kio.mismatches.empty());

  EquivalenceRow omega = check_equivalences(T("(\\x. x x) (\\x. x x)"), 100);
  CHECK(omega.typable == Verdict::NoWithinFuel);
  CHECK(omega.wn_name == Verdict::NoWithinFuel);
  CHECK(omega.wn_whnd == Verdict::NoWithinFuel);
  CHECK(omega.wn_need == Verdict::NoWithinFuel);
  CHECK(omega.mismatches.empty());

  EquivalenceRow lazy = check_equivalences(T("\\x. (\\y. y y) (\\y. y y)"), 100);
  CHECK(lazy.typable == Verdict::Yes);
  CHECK(lazy.wn_name == Verdict::Yes);
  CHECK(lazy.wn_whnd == Verdict::Yes);
  CHECK(lazy.wn_need == Verdict::Yes);
  CHECK(lazy.mismatches.empty());
}

TEST_CASE("corpus run: verdicts coincide pairwise") {
  CorpusSpec spec;
  spec.seed = 1;
  spec.max_size = 12;
  spec.count = 150;
  EquivalenceReport report = run_corpus(spec, 800);
  CHECK(report.mismatch_count == 0);
  CHECK(report.rows.size() == 157);
  // stronger than the definite-pair rule: at this fuel every checker
  // resolves the same way on every corpus term
  for (const EquivalenceRow& row : report.rows) {
    CHECK(row.typable == row.wn_name);
    CHECK(row.wn_name == row.wn_whnd);
    CHECK(row.wn_whnd == row.wn_need);
  }
}

TEST_CASE("observational checker") {
  ObsResult same = check_observational(T("\\x. x"), T("\\y. y"), 6, 200);
  CHECK(same.agree);
  CHECK(!same.context_skeleton.has_value());

  ObsResult diff = check_observational(T("\\x. x"), T("(\\x. x x) (\\x. x x)"), 6, 200);
  CHECK(!diff.agree);
  REQUIRE(diff.context_skeleton.has_value());
  CHECK(print_term(*diff.context_skeleton) == "_");
  CHECK(diff.detail.find("wn_whnd") != std::string::npos);

  ObsResult renamed = check_observational(T("\\x. x ((\\z. z z) (\\z. z z))"),
                                          T("\\x. x ((\\a. a a) (\\b. b b))"), 6, 200);
  CHECK(renamed.agree);
}

TEST_CASE("json: term round trips") {
  std::vector<std::string> sources = {
      "x",
      "\\x. x",
      "(\\x. \\y. x) (\\z. z) ((\\x. x x) (\\x. x x))",
      "x (\\y. y x) z",
  };
  for (const std::string& src : sources) {
    Term t = T(src);
    Term back = term_from_json(term_to_json(t));
    CHECK(print_term(back) == print_term(t));
  }
  Term es = parse_term("(\\z. z)[x2/\\z. z][x1/\\y. y]", true);
  CHECK(print_term(term_from_json(term_to_json(es))) == print_term(es));
  CHECK(term_to_json(es).contains("sub"));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::string> bound;
    Term t = gen::random_pure_term(rng, 1 + static_cast<int>(rng() % 12), bound);
    CHECK(print_term(term_from_json(term_to_json(t))) == print_term(t));
  }
}

TEST_CASE("json: type and derivation round trips") {
  VType ty = arrow({arrow({}, answer()), base("alpha1"), base("alpha1")}, answer());
  CHECK(type_eq(type_from_json(type_to_json(ty)), ty));
  CHECK(type_to_json(answer()) == nlohmann::json({{"ans", true}}));

  Derivation d = kio_typed();
  Derivation back = derivation_from_json(derivation_to_json(d));
  validate(back);
  CHECK(deriv_eq(back, d));

  Derivation inferred = *infer_principal(T("x (\\z. z) ((\\w. w) y)"), 50);
  Derivation round = derivation_from_json(derivation_to_json(inferred));
  validate(round);
  CHECK(deriv_eq(round, inferred));
}

TEST_CASE("json: traces") {
  StrategyResult res = run_strategy(T("(\\x. \\y. x) (\\z. z) ((\\x. x x) (\\x. x x))"),
                                    Strategy::Name, 100);
  nlohmann::json tr = trace_to_json(res);
  CHECK(tr["status"] == "normalized");
  CHECK(tr["initial"].contains("app"));
  CHECK(tr["steps"].size() == res.trace.size());
  CHECK(tr["steps"][0].contains("occ"));
  CHECK(tr["steps"][0].contains("after"));

  StrategyResult stuck = run_strategy(T("(\\x. x x) (\\x. x x)"), Strategy::Name, 10);
  CHECK(trace_to_json(stuck)["status"] == "fuel");

  NeedResult nr = eval_need(T("(\\x1. (\\z. z) (x1 (\\z. z))) (\\y. (\\z. z) y)"), 100);
  nlohmann::json nj = need_result_to_json(nr);
  CHECK(nj["status"] == "answer");
  CHECK(nj["steps"].size() == 8);
  CHECK(nj["steps"][0]["rule"] == "dB");
  CHECK(nj.contains("final"));

  NeedResult st = eval_need(T("x (\\y. y)"), 100);
  nlohmann::json sj = need_result_to_json(st);
  CHECK(sj["status"] == "stuck");
  CHECK(sj["stuck_var"] == "x");
}

TEST_CASE("typing-derived whnd redexes agree with the classifier on corpus terms") {
  CorpusSpec spec;
  spec.seed = 23;
  spec.max_size = 10;
  spec.count = 130;
  spec.include_zoo = false;
  int compared = 0;
  for (const Term& t : generate_corpus(spec)) {
    std::optional<OccurrenceSet> typed = whnd_redexes_by_typing(t, 400);
    if (!typed) continue;
    for (const Occurrence& r : redex_occurrences(t)) {
      NeedClass c = classify(t, r, 400);
      if (c.whnd_needed == NeedFlag::Diverged) continue;
      CHECK((c.whnd_needed == NeedFlag::Yes) == (typed->count(r) > 0));
      ++compared;
    }
  }
  CHECK(compared > 60);
}
