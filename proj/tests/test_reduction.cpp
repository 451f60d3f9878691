#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lamlab/reduction.hpp"

using namespace lamlab;

namespace {

Occurrence at(const char* w) { return Occurrence::parse(w); }

Term K_I_Omega() { return parse_term("(\\x. \\y. x) (\\z. z) ((\\w. w w) (\\w. w w))"); }

OccurrenceSet occ_set(std::initializer_list<const char*> words) {
  OccurrenceSet out;
  for (const char* w : words) out.insert(Occurrence::parse(w));
  return out;
}

Term random_pure_term(std::mt19937_64& rng, int size, std::vector<std::string>& bound) {
  static const char* pool[] = {"x", "y", "z", "w"};
  if (size <= 1) {
    if (!bound.empty() && rng() % 4 != 0) return var(bound[rng() % bound.size()]);
    return var(pool[rng() % 4]);
  }
  if (rng() % 3 == 0) {
    std::string b = pool[rng() % 4];
    bound.push_back(b);
    Term body = random_pure_term(rng, size - 1, bound);
    bound.pop_back();
    return abs(b, body);
  }
  int lsize = 1 + static_cast<int>(rng() % static_cast<unsigned long>(size - 1));
  Term l = random_pure_term(rng, lsize, bound);
  Term r = random_pure_term(rng, size - 1 - lsize, bound);
  return app(l, r);
}

}  // namespace

TEST_CASE("redex occurrences of the running example") {
  Term t = parse_term("(\\x. (\\y. x) x) z");
  CHECK(redex_occurrences(t) == occ_set({"e", "00"}));
  CHECK(redex_occurrences(parse_term("x y")).empty());
  CHECK(redex_occurrences(K_I_Omega()) == occ_set({"0", "1"}));
}

TEST_CASE("to the left order") {
  Term t = parse_term("(\\x. (\\y. x) x) z");
  CHECK(to_the_left(t, at("e"), at("00")));       // prefix case
  CHECK_FALSE(to_the_left(t, at("00"), at("e")));
  Term u = K_I_Omega();
  CHECK(to_the_left(u, at("0"), at("1")));        // divergence case
  CHECK_FALSE(to_the_left(u, at("1"), at("0")));
  CHECK_THROWS_AS(to_the_left(u, at("e"), at("1")), NotARedexError);
  CHECK_THROWS_AS(to_the_left(u, at("0"), at("00")), NotARedexError);
}

TEST_CASE("leftmost head and weak head redexes") {
  Term t = K_I_Omega();
  CHECK(leftmost_redex(t) == at("0"));
  CHECK(head_redex(t) == at("0"));
  CHECK(weak_head_redex(t) == at("0"));

  // under a lambda the head redex survives but the weak head one does not
  Term u = parse_term("\\x. (\\y. y) (\\y. y)");
  CHECK(head_redex(u) == at("0"));
  CHECK(leftmost_redex(u) == at("0"));
  CHECK_FALSE(weak_head_redex(u).has_value());

  // head variable: no head redex, but inner redexes remain
  Term v = parse_term("x ((\\y. y) z)");
  CHECK_FALSE(head_redex(v).has_value());
  CHECK_FALSE(weak_head_redex(v).has_value());
  CHECK(leftmost_redex(v) == at("1"));

  CHECK_FALSE(leftmost_redex(parse_term("\\x. x")).has_value());

  // redex buried under the application spine
  Term w = parse_term("(\\x. x) y z");
  CHECK(weak_head_redex(w) == at("0"));
  CHECK(head_redex(w) == at("0"));
}

TEST_CASE("weak head redex agrees with leftmost and has spine shape") {
  std::mt19937_64 rng(19);
  std::vector<std::string> bound;
  for (int i = 0; i < 300; ++i) {
    Term t = random_pure_term(rng, 10, bound);
    auto whr = weak_head_redex(t);
    if (!whr) continue;
    CHECK(leftmost_redex(t) == whr);
    for (char c : whr->word()) CHECK(c == '0');
    auto hr = head_redex(t);
    CHECK(hr == whr);
  }
}

TEST_CASE("contract performs capture free substitution") {
  Term t = parse_term("(\\x. (\\y. x) x) z");
  CHECK(identical(contract(t, at("e")), parse_term("(\\y. z) z")));
  CHECK(identical(contract(t, at("00")), parse_term("(\\x. x) z")));
  CHECK_THROWS_AS(contract(t, at("0")), NotARedexError);
  CHECK_THROWS_AS(contract(t, at("11")), OccurrenceError);

  // the binder is renamed when the argument would be captured
  Term u = parse_term("(\\x. \\y. x y) (y w)");
  Term r = contract(u, at("e"));
  CHECK(alpha_eq(r, parse_term("\\q. (y w) q")));
  CHECK(r->name != "y");
}

TEST_CASE("normal form predicates nest properly") {
  Term whnf_only = parse_term("\\x. (\\y. y) z");
  CHECK(is_whnf(whnf_only));
  CHECK_FALSE(is_hnf(whnf_only));
  CHECK_FALSE(is_nf(whnf_only));

  Term hnf_only = parse_term("x ((\\y. y) z)");
  CHECK(is_whnf(hnf_only));
  CHECK(is_hnf(hnf_only));
  CHECK_FALSE(is_nf(hnf_only));

  Term nf = parse_term("\\x. x (\\y. y)");
  CHECK(is_nf(nf));
  CHECK(is_hnf(nf));
  CHECK(is_whnf(nf));

  std::mt19937_64 rng(23);
  std::vector<std::string> bound;
  for (int i = 0; i < 300; ++i) {
    Term t = random_pure_term(rng, 10, bound);
    if (is_nf(t)) CHECK(is_hnf(t));
    if (is_hnf(t)) CHECK(is_whnf(t));
    CHECK(is_nf(t) == redex_occurrences(t).empty());
    CHECK(is_hnf(t) == !head_redex(t).has_value());
    CHECK(is_whnf(t) == !weak_head_redex(t).has_value());
  }
}

TEST_CASE("call by name reaches whnf on K I Omega in two steps") {
  StrategyResult res = run_strategy(K_I_Omega(), Strategy::Name, 10);
  REQUIRE(res.status == StrategyStatus::Normalized);
  REQUIRE(res.trace.size() == 2);
  CHECK(res.trace.steps[0].occ == at("0"));
  CHECK(res.trace.steps[1].occ == at("e"));
  CHECK(alpha_eq(res.final(), parse_term("\\z. z")));
}

TEST_CASE("strategies that look deeper diverge on K I Omega's argument") {
  StrategyResult head = run_strategy(K_I_Omega(), Strategy::Head, 10);
  CHECK(head.status == StrategyStatus::Normalized);
  CHECK(alpha_eq(head.final(), parse_term("\\z. z")));

  StrategyResult lm = run_strategy(parse_term("(\\w. w w) (\\w. w w)"), Strategy::Leftmost, 50);
  CHECK(lm.status == StrategyStatus::FuelExhausted);
  CHECK(lm.trace.size() == 50);
  CHECK(alpha_eq(lm.final(), parse_term("(\\w. w w) (\\w. w w)")));
}

TEST_CASE("head strategy goes under binders, name does not") {
  Term t = parse_term("\\x. (\\y. y) (\\y. y)");
  StrategyResult name = run_strategy(t, Strategy::Name, 10);
  CHECK(name.status == StrategyStatus::Normalized);
  CHECK(name.trace.size() == 0);

  StrategyResult head = run_strategy(t, Strategy::Head, 10);
  CHECK(head.status == StrategyStatus::Normalized);
  CHECK(head.trace.size() == 1);
  CHECK(identical(head.final(), parse_term("\\x. \\y. y")));
}

TEST_CASE("already normal open terms normalize in zero steps") {
  for (Strategy s : {Strategy::Name, Strategy::Head, Strategy::Leftmost}) {
    StrategyResult res = run_strategy(parse_term("x (\\y. y)"), s, 10);
    CHECK(res.status == StrategyStatus::Normalized);
    CHECK(res.trace.size() == 0);
  }
}

TEST_CASE("size guard stops exponential growth") {
  // (\x. x x x) duplicates; the guard must kick in before memory does
  Term t = parse_term("(\\x. x x x) (\\x. x x x)");
  StrategyOptions opts;
  opts.max_term_size = 200;
  StrategyResult res = run_strategy(t, Strategy::Leftmost, 1000000, opts);
  CHECK(res.status == StrategyStatus::FuelExhausted);
}

TEST_CASE("leftmost trace on the running example") {
  // (\x. (\y. x) x) z -> (\y. z) z -> z
  Term t = parse_term("(\\x. (\\y. x) x) z");
  StrategyResult res = run_strategy(t, Strategy::Leftmost, 10);
  REQUIRE(res.status == StrategyStatus::Normalized);
  REQUIRE(res.trace.size() == 2);
  CHECK(res.trace.steps[0].occ == at("e"));
  CHECK(res.trace.steps[1].occ == at("e"));
  CHECK(identical(res.final(), var("z")));
}

TEST_CASE("fuel zero reports exhaustion unless already normal") {
  CHECK(run_strategy(K_I_Omega(), Strategy::Name, 0).status == StrategyStatus::FuelExhausted);
  CHECK(run_strategy(parse_term("\\x. x"), Strategy::Name, 0).status ==
        StrategyStatus::Normalized);
}

TEST_CASE("head redex of a lambda wrapped redex sits at the body") {
  // \x. (\z. z)(\z. z) : the redex occurrence is 0, of shape 0^1
  Term t = parse_term("\\x. (\\z. z) (\\z. z)");
  CHECK(head_redex(t) == at("0"));
  CHECK_FALSE(weak_head_redex(t).has_value());
}
