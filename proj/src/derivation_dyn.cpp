#include "lamlab/derivation_dyn.hpp"

#include <algorithm>
#include <deque>

namespace lamlab {

namespace {

// Pop the first pool entry of the wanted type. Because extraction is always
// first-fit per type, consuming one shared pool in traversal order realizes
// the same split as handing each premise its own counted share up front.
Derivation take_by_type(std::vector<Derivation>& pool, const VType& ty) {
  for (auto it = pool.begin(); it != pool.end(); ++it) {
    if (type_eq((*it)->type, ty)) {
      Derivation out = *it;
      pool.erase(it);
      return out;
    }
  }
  throw RuleViolation("typed_substitute: no argument derivation of type " + print_type(ty) +
                      " left in the pool");
}

Derivation subst_rec(const Derivation& d, const std::string& x, const Term& u,
                     std::vector<Derivation>& pool) {
  // Same early-out as substitute(): a subtree without free x is untouched,
  // and it cannot hold typed x occurrences either.
  if (!is_free_in(x, d->subject)) return d;
  switch (d->rule) {
    case Rule::Ax:
      return take_by_type(pool, d->type);
    case Rule::Val:
      return mk_val(substitute(d->subject, x, u));
    case Rule::AbsI: {
      const std::string& y = d->subject->name;  // y != x, else x were not free
      Derivation body = d->premises[0];
      std::string binder = y;
      if (is_free_in(y, u)) {
        std::set<std::string> avoid = all_names(d->subject->left);
        collect_names(u, avoid);
        avoid.insert(x);
        avoid.insert(y);
        binder = fresh_name(avoid);
        body = rename_free(body, y, binder);
      }
      return mk_abs(binder, subst_rec(body, x, u, pool));
    }
    case Rule::AppE: {
      Derivation fun = subst_rec(d->premises[0], x, u, pool);
      std::vector<Derivation> arg_premises;
      for (std::size_t i = 1; i < d->premises.size(); ++i)
        arg_premises.push_back(subst_rec(d->premises[i], x, u, pool));
      return mk_app(fun, arg_premises, substitute(d->subject->right, x, u));
    }
  }
  throw LamError("unreachable rule");
}

}  // namespace

Derivation typed_substitute(const Derivation& body, const std::string& x, const Term& u,
                            const std::vector<Derivation>& args) {
  MultisetType want;
  for (const Derivation& a : args) {
    if (!identical(a->subject, u))
      throw RuleViolation("typed_substitute: argument derivation subject differs from u");
    want.push_back(a->type);
  }
  if (!multiset_eq(canonical_multiset(want), body->ctx.lookup(x)))
    throw RuleViolation("typed_substitute: argument types do not match the context entry for " +
                        x);
  std::vector<Derivation> pool = args;
  Derivation out = subst_rec(body, x, u, pool);
  if (!pool.empty()) throw LamError("typed_substitute: unconsumed argument derivations");
  return out;
}

Derivation rename_free(const Derivation& d, const std::string& from, const std::string& to) {
  if (from == to) return d;
  std::vector<Derivation> axes;
  for (const VType& ty : d->ctx.lookup(from)) axes.push_back(mk_ax(to, ty));
  return typed_substitute(d, from, var(to), axes);
}

Derivation convert_subject(const Derivation& d, const Term& s) {
  if (identical(d->subject, s)) return d;
  if (!alpha_eq(d->subject, s))
    throw RuleViolation("convert_subject: target is not an alpha-variant of the subject");
  switch (d->rule) {
    case Rule::Ax:
      break;  // alpha-equivalent free variables are identical
    case Rule::Val:
      return mk_val(s);
    case Rule::AbsI: {
      Derivation body = d->premises[0];
      if (d->subject->name != s->name) body = rename_free(body, d->subject->name, s->name);
      return mk_abs(s->name, convert_subject(body, s->left));
    }
    case Rule::AppE: {
      Derivation fun = convert_subject(d->premises[0], s->left);
      std::vector<Derivation> args;
      for (std::size_t i = 1; i < d->premises.size(); ++i)
        args.push_back(convert_subject(d->premises[i], s->right));
      return mk_app(fun, args, s->right);
    }
  }
  throw LamError("convert_subject: unreachable");
}

namespace {

// Contract an untyped redex below a typed leaf of the derivation: only the
// subjects change. By maximality of the typed prefix the elements here are
// val nodes or applications with an untyped argument, so a plain textual
// replace_at on the subject is all that is needed.
Derivation rewrite_untyped(const Derivation& e, const Occurrence& rest) {
  Term subject = replace_at(e->subject, rest, contract(subterm_at(e->subject, rest), Occurrence()));
  switch (e->rule) {
    case Rule::Val:
      return mk_val(subject);
    case Rule::AppE:
      if (e->premises.size() == 1 && !rest.word().empty() && rest.word()[0] == '1')
        return mk_app(e->premises[0], {}, subject->right);
      break;
    default:
      break;
  }
  throw LamError("reduce_derivation: typed prefix is not maximal");
}

Derivation reduce_element(const Derivation& e, const Occurrence& rest) {
  if (!rest.word().empty()) return rewrite_untyped(e, rest);
  if (e->rule != Rule::AppE || e->premises[0]->rule != Rule::AbsI)
    throw LamError("reduce_derivation: redex element is not an application of an abstraction");
  const Derivation& fun = e->premises[0];
  std::vector<Derivation> args(e->premises.begin() + 1, e->premises.end());
  return typed_substitute(fun->premises[0], fun->subject->name, e->subject->right, args);
}

}  // namespace

Derivation reduce_derivation(const Derivation& d, const Occurrence& r) {
  Term redex = subterm_at(d->subject, r);
  if (!is_redex(redex)) throw NotARedexError("no redex at " + r.display());
  Occurrence m = maximal_typed_prefix(d, r);
  Occurrence rest = r.suffix_after(m);
  std::vector<Derivation> elems = tree_at(d, m);
  std::vector<Derivation> reduced;
  for (const Derivation& e : elems) reduced.push_back(reduce_element(e, rest));
  Term new_sub = replace_at(subterm_at(d->subject, m), rest, contract(redex, Occurrence()));
  return replace_at_derivation(d, m, reduced, new_sub);
}

namespace {

// Walk t and the derivation of substitute(t, x, u) in lockstep: wherever the
// derivation covers a position where t has a free x, detach that u-typing
// into out and put an axiom for x in its place.
Derivation anti_rec(const Term& t, const std::string& x, const Term& u, const Derivation& d,
                    std::vector<Derivation>& out) {
  if (!is_free_in(x, t)) return d;
  switch (t->kind) {
    case TermKind::Var: {
      // t is exactly x and d derives u
      out.push_back(d);
      return mk_ax(x, d->type);
    }
    case TermKind::App: {
      if (d->rule == Rule::Val) return mk_val(t);
      Derivation fun = anti_rec(t->left, x, u, d->premises[0], out);
      std::vector<Derivation> args;
      for (std::size_t i = 1; i < d->premises.size(); ++i)
        args.push_back(anti_rec(t->right, x, u, d->premises[i], out));
      return mk_app(fun, args, t->right);
    }
    case TermKind::Abs: {
      if (d->rule == Rule::Val) return mk_val(t);
      const std::string& y = t->name;  // y != x since x is free in t
      if (d->subject->name == y)
        return mk_abs(y, anti_rec(t->left, x, u, d->premises[0], out));
      // substitute() renamed the binder: undo the renaming after recursing
      // on the renamed body, which is capture-safe because the fresh name
      // cannot occur in t->left.
      const std::string& yd = d->subject->name;
      Term renamed_body = substitute(t->left, y, var(yd));
      Derivation body = anti_rec(renamed_body, x, u, d->premises[0], out);
      return mk_abs(y, rename_free(body, yd, y));
    }
    case TermKind::Sub:
      break;
  }
  throw LamError("anti_rec: closures have no derivations");
}

Derivation expand_rec(const Term& t, const Occurrence& r, const Derivation& d) {
  if (r.word().empty()) {
    const std::string& x = t->left->name;
    std::vector<Derivation> out;
    Derivation body = anti_rec(t->left->left, x, t->right, d, out);
    return mk_app(mk_abs(x, body), out, t->right);
  }
  char c = r.word()[0];
  Occurrence tail(r.word().substr(1));
  if (t->kind == TermKind::Abs) {
    if (d->rule == Rule::Val) return mk_val(t);
    return mk_abs(t->name, expand_rec(t->left, tail, d->premises[0]));
  }
  if (t->kind != TermKind::App) throw OccurrenceError("no redex at the given occurrence");
  if (d->rule == Rule::Val) return mk_val(t);
  Derivation fun = d->premises[0];
  std::vector<Derivation> args(d->premises.begin() + 1, d->premises.end());
  if (c == '0') {
    fun = expand_rec(t->left, tail, fun);
  } else {
    for (Derivation& a : args) a = expand_rec(t->right, tail, a);
  }
  return mk_app(fun, args, t->right);
}

}  // namespace

Derivation expand_derivation(const Term& t, const Occurrence& r, const Derivation& d_after) {
  Term reduct = contract(subterm_at(t, r), Occurrence());
  Term after = replace_at(t, r, reduct);
  if (!alpha_eq(after, d_after->subject))
    throw RuleViolation("expand_derivation: derivation subject does not match the reduct");
  Derivation d = convert_subject(d_after, after);
  return expand_rec(t, r, d);
}

namespace {

Derivation principal_whnf(const Term& w) {
  if (w->kind == TermKind::Abs) return mk_val(w);
  // head variable applied to zero or more arguments, all left untyped
  Term spine = w;
  std::vector<Term> args;
  while (spine->kind == TermKind::App) {
    args.push_back(spine->right);
    spine = spine->left;
  }
  if (spine->kind != TermKind::Var) throw LamError("principal_whnf: not a weak-head normal form");
  VType ty = base("alpha1");
  for (std::size_t i = 0; i < args.size(); ++i) ty = arrow({}, ty);
  Derivation d = mk_ax(spine->name, ty);
  for (auto it = args.rbegin(); it != args.rend(); ++it) d = mk_app(d, {}, *it);
  return d;
}

}  // namespace

std::optional<Derivation> infer_principal(const Term& t, int fuel) {
  StrategyResult res = run_strategy(t, Strategy::Name, fuel);
  if (res.status != StrategyStatus::Normalized) return std::nullopt;
  Derivation d = principal_whnf(res.final());
  for (std::size_t i = res.trace.steps.size(); i > 0; --i)
    d = expand_derivation(res.trace.before(i - 1), res.trace.steps[i - 1].occ, d);
  return convert_subject(d, t);
}

std::optional<OccurrenceSet> whnd_redexes_by_typing(const Term& t, int fuel) {
  std::optional<Derivation> d = infer_principal(t, fuel);
  if (!d) return std::nullopt;
  OccurrenceSet typed = typed_occurrences(*d);
  OccurrenceSet out;
  for (const Occurrence& p : redex_occurrences(t))
    if (typed.count(p)) out.insert(p);
  return out;
}

}  // namespace lamlab
