#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "lamlab/cbneed.hpp"
#include "lamlab/reduction.hpp"

using namespace lamlab;

namespace {

Term es(const std::string& src) { return parse_term(src, true); }

// the eight-step evaluation of (\x1. I (x1 I)) (\y. I y)
const char* kWorkedStart = "(\\x1. (\\z. z) (x1 (\\z. z))) (\\y. (\\z. z) y)";
const std::vector<const char*> kWorkedSteps = {
    "((\\z. z) (x1 (\\z. z)))[x1/\\y. (\\z. z) y]",
    "x2[x2/x1 (\\z. z)][x1/\\y. (\\z. z) y]",
    "x2[x2/(\\x3. (\\z. z) x3) (\\z. z)][x1/\\y. (\\z. z) y]",
    "x2[x2/((\\z. z) x3)[x3/\\z. z]][x1/\\y. (\\z. z) y]",
    "x2[x2/x4[x4/x3][x3/\\z. z]][x1/\\y. (\\z. z) y]",
    "x2[x2/x4[x4/\\z. z][x3/\\z. z]][x1/\\y. (\\z. z) y]",
    "x2[x2/(\\z. z)[x4/\\z. z][x3/\\z. z]][x1/\\y. (\\z. z) y]",
    "(\\z. z)[x2/\\z. z][x4/\\z. z][x3/\\z. z][x1/\\y. (\\z. z) y]",
};
const std::vector<const char*> kWorkedRules = {"dB", "dB", "lsv", "dB",
                                               "dB", "lsv", "lsv", "lsv"};

Term random_es_term(std::mt19937_64& rng) {
  Term t = gen::redex_rich_term(rng, 4 + static_cast<int>(rng() % 8));
  const char* pool[] = {"x", "y", "z", "w"};
  for (int i = 1 + static_cast<int>(rng() % 3); i > 0; --i) {
    Term bound = rng() % 2 ? abs("a", gen::random_pure_term(rng, 3))
                           : gen::redex_rich_term(rng, 1 + static_cast<int>(rng() % 5));
    t = closure(t, pool[rng() % 4], bound);
  }
  return t;
}

}  // namespace

TEST_CASE("decomposition finds the unique needed position") {
  Term t0 = es(kWorkedStart);
  NeedDecomposition d0 = decompose_need(t0);
  CHECK(d0.status == NeedStatus::Redex);
  CHECK(d0.context.empty());
  CHECK(identical(d0.focus, t0));
  CHECK(d0.focus->kind == TermKind::App);

  // hereditarily needed through the bound term of x2
  Term t2 = es(kWorkedSteps[1]);
  NeedDecomposition d2 = decompose_need(t2);
  CHECK(d2.status == NeedStatus::Redex);
  CHECK(d2.context.empty());
  CHECK(identical(d2.focus, t2));
  CHECK(d2.focus->kind == TermKind::Sub);

  // focus strictly inside: redex under two frames
  Term t5 = es(kWorkedSteps[4]);
  NeedDecomposition d5 = decompose_need(t5);
  CHECK(d5.status == NeedStatus::Redex);
  REQUIRE(d5.context.size() == 2);
  CHECK(d5.context[0].kind == NeedFrame::Kind::CloBody);
  CHECK(d5.context[0].binder == "x1");
  CHECK(d5.context[1].kind == NeedFrame::Kind::CloBound);
  CHECK(d5.context[1].binder == "x2");
  CHECK(identical(d5.focus, es("x4[x4/x3][x3/\\z. z]")));
  CHECK(identical(replug(d5.context, d5.focus), t5));

  CHECK(decompose_need(es("\\x. (\\w. w w) (\\w. w w)")).status == NeedStatus::Answer);
  CHECK(decompose_need(es("(\\q. q)[w/y]")).status == NeedStatus::Answer);

  NeedDecomposition s1 = decompose_need(var("x"));
  CHECK(s1.status == NeedStatus::Stuck);
  CHECK(s1.stuck_var == "x");

  NeedDecomposition s2 = decompose_need(es("x (\\z. z)"));
  CHECK(s2.status == NeedStatus::Stuck);
  CHECK(s2.stuck_var == "x");
  REQUIRE(s2.context.size() == 1);
  CHECK(s2.context[0].kind == NeedFrame::Kind::AppLeft);
  CHECK(identical(replug(s2.context, s2.focus), es("x (\\z. z)")));

  NeedDecomposition s3 = decompose_need(es("y1[y1/x (\\z. z)]"));
  CHECK(s3.status == NeedStatus::Stuck);
  CHECK(s3.stuck_var == "x");
  CHECK(identical(replug(s3.context, s3.focus), es("y1[y1/x (\\z. z)]")));
}

TEST_CASE("single steps follow the rewrite rules") {
  NeedStep s1 = step_need(es(kWorkedStart));
  CHECK(s1.status == NeedStatus::Redex);
  CHECK(s1.rule == "dB");
  CHECK(alpha_eq(s1.term, es(kWorkedSteps[0])));

  NeedStep s2 = step_need(s1.term);
  CHECK(s2.rule == "dB");
  CHECK(alpha_eq(s2.term, es(kWorkedSteps[1])));

  NeedStep s3 = step_need(s2.term);
  CHECK(s3.rule == "lsv");
  CHECK(alpha_eq(s3.term, es(kWorkedSteps[2])));

  CHECK(step_need(es("\\x. (\\w. w w) (\\w. w w)")).status == NeedStatus::Answer);
  NeedStep stuck = step_need(es("x (\\z. z)"));
  CHECK(stuck.status == NeedStatus::Stuck);
  CHECK(stuck.stuck_var == "x");
}

TEST_CASE("the worked example evaluates in eight steps") {
  NeedResult r = eval_need(es(kWorkedStart), 20);
  CHECK(r.outcome == NeedOutcome::Answer);
  REQUIRE(r.steps.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(r.steps[i].rule == kWorkedRules[i]);
    CHECK(alpha_eq(r.steps[i].after, es(kWorkedSteps[i])));
  }
  CHECK(identical(r.final_term, r.steps.back().after));
  Term collapsed = unfold(r.final_term);
  CHECK(is_pure(collapsed));
  CHECK(collapsed->kind == TermKind::Abs);
  CHECK(is_whnf(collapsed));
  CHECK(alpha_eq(collapsed, es("\\z. z")));
}

TEST_CASE("divergence exhausts fuel and open heads get stuck") {
  CHECK(eval_need(es("(\\x. x x) (\\x. x x)"), 50).outcome == NeedOutcome::FuelExhausted);

  NeedResult sv = eval_need(var("x"), 10);
  CHECK(sv.outcome == NeedOutcome::Stuck);
  CHECK(sv.stuck_var == "x");
  CHECK(eval_need(es("x (\\z. z)"), 10).outcome == NeedOutcome::Stuck);

  // answers are recognized even with zero fuel
  CHECK(eval_need(es("\\x. x"), 0).outcome == NeedOutcome::Answer);
}

TEST_CASE("unfold collapses closures") {
  CHECK(alpha_eq(unfold(es("x2[x2/\\z. z]")), es("\\z. z")));
  CHECK(identical(unfold(es("((\\z. z) (x1 (\\z. z)))[x1/\\y. (\\z. z) y]")),
                  es("(\\z. z) ((\\y. (\\z. z) y) (\\z. z))")));

  std::mt19937_64 rng(137);
  for (int i = 0; i < 50; ++i) {
    Term t = gen::random_pure_term(rng, 8);
    CHECK(identical(unfold(t), t));
  }
}

TEST_CASE("reduction never introduces free variables") {
  std::mt19937_64 rng(127);
  int stepped = 0;
  for (int i = 0; i < 150; ++i) {
    Term t = random_es_term(rng);
    for (int k = 0; k < 20; ++k) {
      NeedStep s = step_need(t);
      if (s.status != NeedStatus::Redex) break;
      std::set<std::string> before = free_vars(t);
      std::set<std::string> after = free_vars(s.term);
      for (const std::string& v : after) CHECK(before.count(v) == 1);
      t = s.term;
      ++stepped;
      if (term_size(t) > 4000) break;
    }
  }
  CHECK(stepped > 200);
}

TEST_CASE("answers are need-irreducible") {
  std::mt19937_64 rng(139);
  for (int i = 0; i < 100; ++i) {
    Term t = abs("q", gen::random_pure_term(rng, 6));
    const char* pool[] = {"x", "y", "z", "w"};
    for (int k = static_cast<int>(rng() % 3); k > 0; --k)
      t = closure(t, pool[rng() % 4], gen::random_pure_term(rng, 3));
    NeedDecomposition d = decompose_need(t);
    CHECK(d.status == NeedStatus::Answer);
    CHECK(step_need(t).status == NeedStatus::Answer);
  }
}

TEST_CASE("stepping is deterministic") {
  std::mt19937_64 rng(149);
  for (int i = 0; i < 100; ++i) {
    Term t = random_es_term(rng);
    NeedStep a = step_need(t);
    NeedStep b = step_need(t);
    CHECK(a.status == b.status);
    if (a.status == NeedStatus::Redex) {
      CHECK(identical(a.term, b.term));
      CHECK(a.rule == b.rule);
    }
  }
}

TEST_CASE("need evaluation agrees with the name strategy on closed terms") {
  std::mt19937_64 rng(131);
  const char* values[] = {"\\a. a", "\\a. \\b. a", "\\a. a a", "\\a. \\b. b"};
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    Term body = gen::random_pure_term(rng, 4 + static_cast<int>(rng() % 8));
    Term t = abs("x", abs("y", abs("z", abs("w", body))));
    for (int k = 0; k < 4; ++k) t = app(t, parse_term(values[rng() % 4]));
    REQUIRE(free_vars(t).empty());

    NeedResult need = eval_need(t, 800);
    StrategyResult name = run_strategy(t, Strategy::Name, 800);
    CHECK(need.outcome != NeedOutcome::Stuck);
    bool name_wn = name.status == StrategyStatus::Normalized;
    bool need_wn = need.outcome == NeedOutcome::Answer;
    CHECK(name_wn == need_wn);
    if (name_wn && need_wn) {
      CHECK(name.final()->kind == TermKind::Abs);
      Term collapsed = unfold(need.final_term);
      CHECK(collapsed->kind == TermKind::Abs);
      CHECK(is_whnf(collapsed));
    }
    ++compared;
  }
  CHECK(compared == 200);
}
