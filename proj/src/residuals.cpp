#include "lamlab/residuals.hpp"

namespace lamlab {

namespace {

void free_occ_rec(const Term& t, const std::string& x, std::string& path, OccurrenceSet& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (t->name == x) out.insert(Occurrence(path));
      return;
    case TermKind::App:
      path.push_back('0');
      free_occ_rec(t->left, x, path, out);
      path.back() = '1';
      free_occ_rec(t->right, x, path, out);
      path.pop_back();
      return;
    case TermKind::Abs:
      if (t->name == x) return;  // shadowed below
      path.push_back('0');
      free_occ_rec(t->left, x, path, out);
      path.pop_back();
      return;
    case TermKind::Sub:
      throw LamError("free_var_occurrences: closure-free terms only");
  }
}

}  // namespace

OccurrenceSet free_var_occurrences(const Term& body, const std::string& x) {
  OccurrenceSet out;
  std::string path;
  free_occ_rec(body, x, path, out);
  return out;
}

OccurrenceSet residuals_step(const Term& t, const Occurrence& p, const Occurrence& r) {
  if (!has_occurrence(t, p))
    throw OccurrenceError("no subterm at " + p.display() + " in " + print_term(t));
  Term redex = subterm_at(t, r);
  if (!is_redex(redex))
    throw NotARedexError("no redex at " + r.display() + " in " + print_term(t));

  if (!r.prefix_of(p)) return {p};

  Occurrence rest = p.suffix_after(r);
  // p equal to the redex or to its abstraction node: erased
  if (rest.is_root() || rest.word() == "0") return {};

  if (rest.at(0) == '0') {
    // p = r 0 0 q, inside the abstraction body: the body moves up to r
    Occurrence q(rest.word().substr(2));
    return {r + q};
  }

  // p = r 1 q, inside the argument: one copy per free occurrence of the
  // bound variable in the body
  Occurrence q(rest.word().substr(1));
  const Term& body = redex->left->left;
  const std::string& x = redex->left->name;
  OccurrenceSet out;
  for (const Occurrence& k : free_var_occurrences(body, x)) out.insert(r + k + q);
  return out;
}

OccurrenceSet residuals_step_set(const Term& t, const OccurrenceSet& ps, const Occurrence& r) {
  OccurrenceSet out;
  for (const Occurrence& p : ps)
    for (const Occurrence& q : residuals_step(t, p, r)) out.insert(q);
  return out;
}

OccurrenceSet residuals_trace(const OccurrenceSet& ps, const ReductionTrace& trace) {
  OccurrenceSet cur = ps;
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    cur = residuals_step_set(trace.before(i), cur, trace.steps[i].occ);
  return cur;
}

bool used_in(const Occurrence& r, const ReductionTrace& trace) {
  OccurrenceSet cur = {r};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (cur.count(trace.steps[i].occ)) return true;
    cur = residuals_step_set(trace.before(i), cur, trace.steps[i].occ);
  }
  return false;
}

}  // namespace lamlab
