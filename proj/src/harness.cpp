#include "lamlab/harness.hpp"

#include <algorithm>
#include <random>

#include "lamlab/cbneed.hpp"
#include "lamlab/derivation_dyn.hpp"
#include "lamlab/neededness.hpp"
#include "lamlab/reduction.hpp"

namespace lamlab {

namespace {

Term corpus_term(std::mt19937_64& rng, int size, std::vector<std::string>& bound,
                 bool closed_only) {
  static const char* pool[] = {"x", "y", "z", "w"};
  if (size <= 1) {
    if (!bound.empty() && (closed_only || rng() % 4 != 0))
      return var(bound[rng() % bound.size()]);
    if (closed_only) {
      // no variable in scope: the smallest closed term
      std::string b = pool[rng() % 4];
      return abs(b, var(b));
    }
    return var(pool[rng() % 4]);
  }
  if (bound.empty() && closed_only) {
    std::string b = pool[rng() % 4];
    bound.push_back(b);
    Term body = corpus_term(rng, size - 1, bound, closed_only);
    bound.pop_back();
    return abs(b, body);
  }
  // favour applications of abstractions so the corpus actually reduces
  if (size >= 4 && rng() % 2 == 0) {
    int asize = 1 + static_cast<int>(rng() % static_cast<unsigned long>(size - 3));
    std::string b = pool[rng() % 4];
    bound.push_back(b);
    Term body = corpus_term(rng, size - 2 - asize, bound, closed_only);
    bound.pop_back();
    Term arg = corpus_term(rng, asize, bound, closed_only);
    return app(abs(b, body), arg);
  }
  if (size == 2 || rng() % 3 == 0) {
    std::string b = pool[rng() % 4];
    bound.push_back(b);
    Term body = corpus_term(rng, size - 1, bound, closed_only);
    bound.pop_back();
    return abs(b, body);
  }
  int lsize = 1 + static_cast<int>(rng() % static_cast<unsigned long>(size - 2));
  Term l = corpus_term(rng, lsize, bound, closed_only);
  Term r = corpus_term(rng, size - 1 - lsize, bound, closed_only);
  return app(l, r);
}

}  // namespace

std::vector<Term> generate_corpus(const CorpusSpec& spec) {
  std::vector<Term> out;
  if (spec.include_zoo) {
    out.push_back(parse_term("\\x. x"));
    out.push_back(parse_term("\\x. \\y. x"));
    out.push_back(parse_term("(\\x. x x) (\\x. x x)"));
    out.push_back(parse_term("\\x. x x"));
    out.push_back(parse_term("(\\x. \\y. x) (\\z. z) ((\\x. x x) (\\x. x x))"));
    out.push_back(parse_term("(\\y. \\x. ((\\z. z) x) ((\\z. z) (\\z. z))) ((\\z. z) (\\z. z))"));
    out.push_back(parse_term("(\\x1. (\\z. z) (x1 (\\z. z))) (\\y. (\\z. z) y)"));
  }
  std::mt19937_64 rng(spec.seed);
  for (int i = 0; i < spec.count; ++i) {
    int size = 1 + static_cast<int>(rng() % static_cast<unsigned long>(std::max(1, spec.max_size)));
    if (spec.closed_only && size < 2) size = 2;  // smallest closed term has size 2
    std::vector<std::string> bound;
    out.push_back(corpus_term(rng, size, bound, spec.closed_only));
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::NoWithinFuel:
      return "no-within-fuel";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool is_definite(Verdict v) { return v == Verdict::Yes; }

namespace {

constexpr std::size_t kMaxTermSize = 50000;

Verdict wn_name_verdict(const Term& t, int fuel) {
  StrategyResult r = run_strategy(t, Strategy::Name, fuel);
  return r.status == StrategyStatus::Normalized ? Verdict::Yes : Verdict::NoWithinFuel;
}

// independent driver: step the weak-head needed redex until WHNF
Verdict wn_whnd_verdict(const Term& t, int fuel) {
  Term cur = t;
  for (int i = 0; i < fuel; ++i) {
    std::optional<Term> next = whnd_step(cur);
    if (!next) return Verdict::Yes;
    cur = *next;
    if (term_size(cur) > kMaxTermSize) return Verdict::NoWithinFuel;
  }
  return whnd_step(cur) ? Verdict::NoWithinFuel : Verdict::Yes;
}

// stuck terms are need-normal: the needed variable is free
Verdict wn_need_verdict(const Term& t, int fuel) {
  NeedResult r = eval_need(t, fuel);
  return r.outcome == NeedOutcome::FuelExhausted ? Verdict::NoWithinFuel : Verdict::Yes;
}

Verdict typable_verdict(const Term& t, int fuel) {
  return infer_principal(t, fuel).has_value() ? Verdict::Yes : Verdict::NoWithinFuel;
}

void pair_check(const char* an, Verdict a, const char* bn, Verdict b,
                std::vector<std::string>& out) {
  if (is_definite(a) && is_definite(b) && a != b)
    out.push_back(std::string(an) + "=" + to_string(a) + " vs " + bn + "=" + to_string(b));
}

}  // namespace

EquivalenceRow check_equivalences(const Term& t, int fuel) {
  EquivalenceRow row;
  row.term = t;
  row.typable = typable_verdict(t, fuel);
  row.wn_name = wn_name_verdict(t, fuel);
  row.wn_whnd = wn_whnd_verdict(t, fuel);
  row.wn_need = wn_need_verdict(t, fuel);
  pair_check("typable", row.typable, "wn_name", row.wn_name, row.mismatches);
  pair_check("typable", row.typable, "wn_whnd", row.wn_whnd, row.mismatches);
  pair_check("typable", row.typable, "wn_need", row.wn_need, row.mismatches);
  pair_check("wn_name", row.wn_name, "wn_whnd", row.wn_whnd, row.mismatches);
  pair_check("wn_name", row.wn_name, "wn_need", row.wn_need, row.mismatches);
  pair_check("wn_whnd", row.wn_whnd, "wn_need", row.wn_need, row.mismatches);
  return row;
}

EquivalenceReport run_corpus(const CorpusSpec& spec, int fuel) {
  EquivalenceReport report;
  for (const Term& t : generate_corpus(spec)) {
    report.rows.push_back(check_equivalences(t, fuel));
    report.mismatch_count += report.rows.back().mismatches.size();
  }
  return report;
}

namespace {

// context skeletons with a single hole, by structural size
void contexts_up_to(int max_size, std::vector<Term>& out) {
  Term hole = var(NamedContext::hole_marker());
  std::vector<std::vector<Term>> by_size(static_cast<std::size_t>(max_size) + 1);
  if (max_size >= 1) by_size[1].push_back(hole);
  std::vector<Term> pool = {var("y"), parse_term("\\a. a"), parse_term("\\a. a a")};
  static const char* binders[] = {"x", "y"};
  for (int n = 2; n <= max_size; ++n) {
    for (const char* b : binders)
      for (const Term& c : by_size[n - 1]) by_size[n].push_back(abs(b, c));
    for (const Term& s : pool) {
      int ssize = static_cast<int>(term_size(s));
      int csize = n - 1 - ssize;
      if (csize < 1 || csize > max_size) continue;
      for (const Term& c : by_size[csize]) {
        by_size[n].push_back(app(c, s));
        by_size[n].push_back(app(s, c));
      }
    }
  }
  for (int n = 1; n <= max_size; ++n)
    out.insert(out.end(), by_size[n].begin(), by_size[n].end());
}

}  // namespace

ObsResult check_observational(const Term& t, const Term& u, int max_ctx_size, int fuel) {
  std::vector<Term> skeletons;
  contexts_up_to(max_ctx_size, skeletons);
  for (const Term& skel : skeletons) {
    NamedContext ctx(skel);
    Term ct = ctx.plug(t);
    Term cu = ctx.plug(u);
    Verdict wt = wn_whnd_verdict(ct, fuel);
    Verdict wu = wn_whnd_verdict(cu, fuel);
    if (wt != wu) {
      return {false, skel,
              std::string("wn_whnd: left=") + to_string(wt) + " right=" + to_string(wu)};
    }
    Verdict nt = wn_need_verdict(ct, fuel);
    Verdict nu = wn_need_verdict(cu, fuel);
    if (nt != nu) {
      return {false, skel,
              std::string("wn_need: left=") + to_string(nt) + " right=" + to_string(nu)};
    }
  }
  return {};
}

}  // namespace lamlab
