#include "lamlab/cbneed.hpp"

#include <cassert>

namespace lamlab {

namespace {

constexpr std::size_t kMaxTermSize = 50000;

// L<\y.t> shape: an abstraction under a chain of closures.
bool is_answer_term(const Term& t) {
  Term u = t;
  while (u->kind == TermKind::Sub) u = u->left;
  return u->kind == TermKind::Abs;
}

enum class RecTag { Redex, Answer, NeedVar };

struct RecOut {
  RecTag tag;
  Term focus;
  std::string var;
};

RecOut rec(const Term& t, std::vector<NeedFrame>& fr) {
  switch (t->kind) {
    case TermKind::Var:
      return {RecTag::NeedVar, t, t->name};
    case TermKind::Abs:
      return {RecTag::Answer, t, ""};
    case TermKind::App: {
      if (is_answer_term(t->left)) return {RecTag::Redex, t, ""};
      fr.push_back({NeedFrame::Kind::AppLeft, "", t->right});
      RecOut r = rec(t->left, fr);
      assert(r.tag != RecTag::Answer);
      return r;
    }
    case TermKind::Sub: {
      std::size_t mark = fr.size();
      fr.push_back({NeedFrame::Kind::CloBody, t->name, t->right});
      RecOut r = rec(t->left, fr);
      if (r.tag != RecTag::NeedVar || r.var != t->name) return r;
      // the body needs this binder: the needed position continues in the
      // bound term, or the closure itself is the lsv redex
      fr.resize(mark);
      if (is_answer_term(t->right)) return {RecTag::Redex, t, ""};
      fr.push_back({NeedFrame::Kind::CloBound, t->name, t->left});
      RecOut b = rec(t->right, fr);
      assert(b.tag != RecTag::Answer);
      return b;
    }
  }
  throw LamError("unreachable term kind");
}

}  // namespace

NeedDecomposition decompose_need(const Term& t) {
  std::vector<NeedFrame> fr;
  RecOut r = rec(t, fr);
  switch (r.tag) {
    case RecTag::Redex:
      return {NeedStatus::Redex, std::move(fr), r.focus, ""};
    case RecTag::Answer:
      return {NeedStatus::Answer, {}, t, ""};
    case RecTag::NeedVar:
      return {NeedStatus::Stuck, std::move(fr), r.focus, r.var};
  }
  throw LamError("unreachable");
}

Term replug(const std::vector<NeedFrame>& context, const Term& focus) {
  Term t = focus;
  for (auto it = context.rbegin(); it != context.rend(); ++it) {
    switch (it->kind) {
      case NeedFrame::Kind::AppLeft:
        t = app(t, it->other);
        break;
      case NeedFrame::Kind::CloBody:
        t = closure(t, it->binder, it->other);
        break;
      case NeedFrame::Kind::CloBound:
        t = closure(it->other, it->binder, t);
        break;
    }
  }
  return t;
}

namespace {

// L<\x.b> u -> L<b[x/u]>, renaming chain binders that would capture a free
// variable of u on its way in, and the lambda binder when its name already
// occurs in u (hygiene only; the closure binder never scopes over u).
Term fire_dB(const Term& l, const Term& u) {
  if (l->kind == TermKind::Abs) {
    std::string binder = l->name;
    Term body = l->left;
    if (all_names(u).count(binder)) {
      std::set<std::string> avoid = all_names(body);
      collect_names(u, avoid);
      avoid.insert(binder);
      std::string renamed = fresh_name(avoid);
      body = substitute(body, binder, var(renamed));
      binder = renamed;
    }
    return closure(body, binder, u);
  }
  Term body = l->left;
  std::string binder = l->name;
  if (is_free_in(binder, u)) {
    std::set<std::string> avoid = all_names(body);
    collect_names(u, avoid);
    avoid.insert(binder);
    std::string renamed = fresh_name(avoid);
    body = substitute(body, binder, var(renamed));
    binder = renamed;
  }
  return closure(fire_dB(body, u), binder, l->right);
}

// The needed free variable of a redex-free need path.
std::string needed_var(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name;
    case TermKind::App:
      return needed_var(t->left);
    case TermKind::Sub: {
      std::string z = needed_var(t->left);
      return z == t->name ? needed_var(t->right) : z;
    }
    case TermKind::Abs:
      break;
  }
  throw LamError("needed_var: no needed position");
}

// Replace the hereditarily needed occurrence of x in the need context body.
Term plug_needed(const Term& t, const std::string& x, const Term& repl) {
  switch (t->kind) {
    case TermKind::Var:
      if (t->name != x) throw LamError("plug_needed: unexpected variable");
      return repl;
    case TermKind::App:
      return app(plug_needed(t->left, x, repl), t->right);
    case TermKind::Sub: {
      if (needed_var(t->left) == t->name)
        return closure(t->left, t->name, plug_needed(t->right, x, repl));
      return closure(plug_needed(t->left, x, repl), t->name, t->right);
    }
    case TermKind::Abs:
      break;
  }
  throw LamError("plug_needed: no needed position");
}

// N<<x>>[x/L<v>] -> L<N<v'>[x/v]> with v' a fresh-binder copy of v. Chain
// binders of L that would capture material moving inside are renamed first;
// the kept binder is refreshed when v itself has x free.
Term fire_lsv(const Term& body, const std::string& x, const Term& bound) {
  std::set<std::string> avoid = all_names(body);
  collect_names(bound, avoid);
  avoid.insert(x);

  // rename chain binders on the bound side that would capture material
  // moving under them, outermost first
  std::set<std::string> incoming = free_vars(body);
  incoming.erase(x);
  Term fixed;
  {
    Term cur = bound;
    std::vector<std::pair<std::string, Term>> frames;
    while (cur->kind == TermKind::Sub) {
      std::string b = cur->name;
      Term inner = cur->left;
      if (incoming.count(b)) {
        std::string renamed = fresh_name(avoid);
        avoid.insert(renamed);
        inner = substitute(inner, b, var(renamed));
        b = renamed;
      }
      frames.emplace_back(b, cur->right);
      cur = inner;
    }
    fixed = cur;
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
      fixed = closure(fixed, it->first, it->second);
  }

  // peel the fixed chain
  std::vector<std::pair<std::string, Term>> chain;
  Term v = fixed;
  while (v->kind == TermKind::Sub) {
    chain.emplace_back(v->name, v->right);
    v = v->left;
  }
  if (v->kind != TermKind::Abs) throw LamError("fire_lsv: bound term is not an answer");
  collect_names(fixed, avoid);

  // fresh-binder copy of the value for the needed hole
  std::string copy_binder = fresh_name(avoid);
  avoid.insert(copy_binder);
  Term v_copy = abs(copy_binder, substitute(v->left, v->name, var(copy_binder)));

  // plug via a placeholder so renaming the kept binder cannot touch the copy
  std::string hole = fresh_name(avoid);
  avoid.insert(hole);
  Term plugged = plug_needed(body, x, var(hole));
  std::string kept = x;
  if (is_free_in(x, v)) {
    kept = fresh_name(avoid);
    avoid.insert(kept);
    plugged = substitute(plugged, x, var(kept));
  }
  plugged = substitute(plugged, hole, v_copy);

  Term out = closure(plugged, kept, v);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    out = closure(out, it->first, it->second);
  return out;
}

}  // namespace

NeedStep step_need(const Term& t) {
  NeedDecomposition d = decompose_need(t);
  switch (d.status) {
    case NeedStatus::Answer:
      return {NeedStatus::Answer, t, "", ""};
    case NeedStatus::Stuck:
      return {NeedStatus::Stuck, t, "", d.stuck_var};
    case NeedStatus::Redex:
      break;
  }
  Term fired;
  std::string rule;
  if (d.focus->kind == TermKind::App) {
    rule = "dB";
    fired = fire_dB(d.focus->left, d.focus->right);
  } else {
    rule = "lsv";
    fired = fire_lsv(d.focus->left, d.focus->name, d.focus->right);
  }
  return {NeedStatus::Redex, replug(d.context, fired), rule, ""};
}

NeedResult eval_need(const Term& t, int fuel) {
  NeedResult res;
  res.initial = t;
  Term cur = t;
  for (int i = 0; i < fuel; ++i) {
    NeedStep s = step_need(cur);
    switch (s.status) {
      case NeedStatus::Answer:
        res.outcome = NeedOutcome::Answer;
        res.final_term = cur;
        return res;
      case NeedStatus::Stuck:
        res.outcome = NeedOutcome::Stuck;
        res.final_term = cur;
        res.stuck_var = s.stuck_var;
        return res;
      case NeedStatus::Redex:
        cur = s.term;
        res.steps.push_back({s.rule, cur});
        if (term_size(cur) > kMaxTermSize) {
          res.outcome = NeedOutcome::FuelExhausted;
          res.final_term = cur;
          return res;
        }
        break;
    }
  }
  NeedStep s = step_need(cur);
  if (s.status == NeedStatus::Answer) {
    res.outcome = NeedOutcome::Answer;
    res.final_term = cur;
  } else if (s.status == NeedStatus::Stuck) {
    res.outcome = NeedOutcome::Stuck;
    res.final_term = cur;
    res.stuck_var = s.stuck_var;
  } else {
    res.outcome = NeedOutcome::FuelExhausted;
    res.final_term = cur;
  }
  return res;
}

Term unfold(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return t;
    case TermKind::App:
      return app(unfold(t->left), unfold(t->right));
    case TermKind::Abs:
      return abs(t->name, unfold(t->left));
    case TermKind::Sub:
      return substitute(unfold(t->left), t->name, unfold(t->right));
  }
  throw LamError("unreachable term kind");
}

}  // namespace lamlab
