#include "lamlab/neededness.hpp"

#include <deque>
#include <string>
#include <unordered_set>

namespace lamlab {

namespace {

void require_redex(const Term& t, const Occurrence& r) {
  Term sub = subterm_at(t, r);
  if (!is_redex(sub))
    throw NotARedexError("no redex at " + r.display() + " in " + print_term(t));
}

NeedFlag strategy_flag(const Occurrence& r, const StrategyResult& res) {
  if (res.status == StrategyStatus::FuelExhausted) return NeedFlag::Diverged;
  return used_in(r, res.trace) ? NeedFlag::Yes : NeedFlag::No;
}

}  // namespace

const char* to_string(NeedFlag f) {
  switch (f) {
    case NeedFlag::Yes: return "yes";
    case NeedFlag::No: return "no";
    case NeedFlag::Diverged: return "diverged";
  }
  return "?";
}

const char* to_string(OracleFlag f) {
  switch (f) {
    case OracleFlag::Yes: return "yes";
    case OracleFlag::No: return "no";
    case OracleFlag::Inconclusive: return "inconclusive";
  }
  return "?";
}

NeedReport classify_full(const Term& t, const Occurrence& r, int fuel) {
  require_redex(t, r);
  NeedReport rep{
      {},
      run_strategy(t, Strategy::Leftmost, fuel),
      run_strategy(t, Strategy::Head, fuel),
      run_strategy(t, Strategy::Name, fuel),
  };
  rep.flags.needed = strategy_flag(r, rep.leftmost);
  rep.flags.head_needed = strategy_flag(r, rep.head);
  rep.flags.whnd_needed = strategy_flag(r, rep.name);
  return rep;
}

NeedClass classify(const Term& t, const Occurrence& r, int fuel) {
  return classify_full(t, r, fuel).flags;
}

std::optional<Term> whnd_step(const Term& t) {
  auto r = weak_head_redex(t);
  if (!r) return std::nullopt;
  return contract(t, *r);
}

OracleClass brute_force_classify(const Term& t, const Occurrence& r, int depth,
                                 std::size_t width) {
  require_redex(t, r);
  constexpr std::size_t kMaxTermSize = 4000;

  struct State {
    Term term;
    OccurrenceSet res;  // residuals of r along this path
    int steps;
  };
  auto state_key = [](const Term& u, const OccurrenceSet& res) {
    return print_term(canonicalize(u)) + "|" + display(res);
  };

  std::deque<State> queue;
  std::unordered_set<std::string> seen;
  queue.push_back({t, {r}, 0});
  seen.insert(state_key(t, {r}));

  bool truncated = false;
  bool whnf_witness = false, hnf_witness = false, nf_witness = false;
  std::size_t visited = 0;

  while (!queue.empty()) {
    if (visited >= width) {
      truncated = true;
      break;
    }
    State st = std::move(queue.front());
    queue.pop_front();
    ++visited;

    if (is_whnf(st.term)) whnf_witness = true;
    if (is_hnf(st.term)) hnf_witness = true;
    if (is_nf(st.term)) nf_witness = true;
    if (whnf_witness && hnf_witness && nf_witness) break;

    OccurrenceSet rocs = redex_occurrences(st.term);
    if (rocs.empty()) continue;
    if (st.steps >= depth) {
      truncated = true;
      continue;
    }
    for (const Occurrence& s : rocs) {
      if (st.res.count(s)) continue;  // this branch would use r
      Term next = contract(st.term, s);
      if (term_size(next) > kMaxTermSize) {
        truncated = true;
        continue;
      }
      OccurrenceSet res = residuals_step_set(st.term, st.res, s);
      if (seen.insert(state_key(next, res)).second)
        queue.push_back({std::move(next), std::move(res), st.steps + 1});
    }
  }

  auto verdict = [&](bool witness) {
    if (witness) return OracleFlag::No;
    return truncated ? OracleFlag::Inconclusive : OracleFlag::Yes;
  };
  return {verdict(nf_witness), verdict(hnf_witness), verdict(whnf_witness)};
}

}  // namespace lamlab
