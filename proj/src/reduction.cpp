#include "lamlab/reduction.hpp"

namespace lamlab {

bool is_redex(const Term& t) {
  return t->kind == TermKind::App && t->left->kind == TermKind::Abs;
}

namespace {

void redexes_rec(const Term& t, std::string& path, OccurrenceSet& out) {
  switch (t->kind) {
    case TermKind::Var:
      return;
    case TermKind::App:
      if (t->left->kind == TermKind::Abs) out.insert(Occurrence(path));
      path.push_back('0');
      redexes_rec(t->left, path, out);
      path.back() = '1';
      redexes_rec(t->right, path, out);
      path.pop_back();
      return;
    case TermKind::Abs:
      path.push_back('0');
      redexes_rec(t->left, path, out);
      path.pop_back();
      return;
    case TermKind::Sub:
      throw LamError("redex_occurrences: closure-free terms only");
  }
}

}  // namespace

OccurrenceSet redex_occurrences(const Term& t) {
  OccurrenceSet out;
  std::string path;
  redexes_rec(t, path, out);
  return out;
}

bool to_the_left(const Term& t, const Occurrence& r1, const Occurrence& r2) {
  if (!is_redex(subterm_at(t, r1)))
    throw NotARedexError("no redex at " + r1.display() + " in " + print_term(t));
  if (!is_redex(subterm_at(t, r2)))
    throw NotARedexError("no redex at " + r2.display() + " in " + print_term(t));
  if (r1.proper_prefix_of(r2)) return true;
  if (r2.prefix_of(r1)) return false;
  const std::string& a = r1.word();
  const std::string& b = r2.word();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] == '0';
  return false;  // unreachable for distinct occurrences
}

std::optional<Occurrence> leftmost_redex(const Term& t) {
  // lexicographically least redex occurrence == to-the-left minimum
  OccurrenceSet occs = redex_occurrences(t);
  if (occs.empty()) return std::nullopt;
  return *occs.begin();
}

std::optional<Occurrence> head_redex(const Term& t) {
  std::string path;
  Term cur = t;
  while (cur->kind == TermKind::Abs) {
    path.push_back('0');
    cur = cur->left;
  }
  while (cur->kind == TermKind::App) {
    if (cur->left->kind == TermKind::Abs) return Occurrence(path);
    path.push_back('0');
    cur = cur->left;
  }
  return std::nullopt;
}

std::optional<Occurrence> weak_head_redex(const Term& t) {
  if (t->kind == TermKind::Abs) return std::nullopt;
  std::string path;
  Term cur = t;
  while (cur->kind == TermKind::App) {
    if (cur->left->kind == TermKind::Abs) return Occurrence(path);
    path.push_back('0');
    cur = cur->left;
  }
  return std::nullopt;
}

Term contract(const Term& t, const Occurrence& r) {
  Term redex = subterm_at(t, r);
  if (!is_redex(redex))
    throw NotARedexError("no redex at " + r.display() + " in " + print_term(t));
  Term contractum = substitute(redex->left->left, redex->left->name, redex->right);
  return replace_at(t, r, contractum);
}

bool is_nf(const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Abs: return is_nf(t->left);
    case TermKind::App: return t->left->kind != TermKind::Abs && is_nf(t->left) && is_nf(t->right);
    case TermKind::Sub: throw LamError("is_nf: closure-free terms only");
  }
  return false;
}

bool is_hnf(const Term& t) {
  Term cur = t;
  while (cur->kind == TermKind::Abs) cur = cur->left;
  while (cur->kind == TermKind::App) cur = cur->left;
  if (cur->kind == TermKind::Sub) throw LamError("is_hnf: closure-free terms only");
  return cur->kind == TermKind::Var;
}

bool is_whnf(const Term& t) {
  if (t->kind == TermKind::Abs) return true;
  Term cur = t;
  while (cur->kind == TermKind::App) cur = cur->left;
  if (cur->kind == TermKind::Sub) throw LamError("is_whnf: closure-free terms only");
  return cur->kind == TermKind::Var;
}

namespace {

std::optional<Occurrence> pick_redex(const Term& t, Strategy s) {
  switch (s) {
    case Strategy::Name: return weak_head_redex(t);
    case Strategy::Head: return head_redex(t);
    case Strategy::Leftmost: return leftmost_redex(t);
  }
  return std::nullopt;
}

bool target_reached(const Term& t, Strategy s) {
  switch (s) {
    case Strategy::Name: return is_whnf(t);
    case Strategy::Head: return is_hnf(t);
    case Strategy::Leftmost: return is_nf(t);
  }
  return false;
}

}  // namespace

StrategyResult run_strategy(const Term& t, Strategy strategy, int fuel,
                            const StrategyOptions& opts) {
  StrategyResult res{StrategyStatus::Normalized, ReductionTrace{t, {}}, };
  Term cur = t;
  for (int step = 0; step < fuel; ++step) {
    std::optional<Occurrence> r = pick_redex(cur, strategy);
    // a strategy finds no redex exactly when its normal form is reached
    if (r.has_value() == target_reached(cur, strategy))
      throw LamError("strategy dichotomy violated on " + print_term(cur));
    if (!r) {
      res.status = StrategyStatus::Normalized;
      if (!opts.record_trace) res.trace.initial = cur;
      return res;
    }
    cur = contract(cur, *r);
    if (opts.record_trace)
      res.trace.steps.push_back(TraceStep{*r, cur});
    else
      res.trace.initial = cur;
    if (term_size(cur) > opts.max_term_size) break;
  }
  if (!pick_redex(cur, strategy)) {
    res.status = StrategyStatus::Normalized;
  } else {
    res.status = StrategyStatus::FuelExhausted;
  }
  if (!opts.record_trace) res.trace.initial = cur;
  return res;
}

}  // namespace lamlab
