#include "lamlab/derivation.hpp"

#include <deque>

namespace lamlab {

namespace {

MultisetType premise_types(const std::vector<Derivation>& args) {
  MultisetType ms;
  ms.reserve(args.size());
  for (const auto& a : args) ms.push_back(a->type);
  return canonical_multiset(std::move(ms));
}

TypingContext conclusion_ctx(const Derivation& fun, const std::vector<Derivation>& args) {
  TypingContext ctx = fun->ctx;
  for (const auto& a : args) ctx = ctx_sum(ctx, a->ctx);
  return ctx;
}

}  // namespace

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Val: return "val";
    case Rule::AbsI: return "abs";
    case Rule::AppE: return "app";
  }
  return "?";
}

Derivation mk_ax(const std::string& x, const VType& t) {
  return std::make_shared<DerivationNode>(Rule::Ax, TypingContext::singleton(x, {t}),
                                          var(x), t, std::vector<Derivation>{});
}

Derivation mk_val(const Term& lam) {
  if (!lam || lam->kind != TermKind::Abs)
    throw RuleViolation("val applies to abstractions only, got " +
                        (lam ? print_term(lam) : std::string("null")));
  return std::make_shared<DerivationNode>(Rule::Val, TypingContext{}, lam, answer(),
                                          std::vector<Derivation>{});
}

Derivation mk_abs(const std::string& x, const Derivation& body) {
  VType ty = arrow(body->ctx.lookup(x), body->type);
  return std::make_shared<DerivationNode>(Rule::AbsI, ctx_remove(body->ctx, x),
                                          abs(x, body->subject), ty,
                                          std::vector<Derivation>{body});
}

Derivation mk_app(const Derivation& fun, const std::vector<Derivation>& args,
                  std::optional<Term> arg_term) {
  if (fun->type->kind != TypeKind::Arrow)
    throw RuleViolation("application head has non-arrow type " + print_type(fun->type));
  if (!multiset_eq(fun->type->domain, premise_types(args)))
    throw RuleViolation("argument premises type " + print_multiset(premise_types(args)) +
                        " but the head expects " + print_multiset(fun->type->domain));
  Term u;
  if (!args.empty()) {
    u = args.front()->subject;
    for (const auto& a : args)
      if (!identical(a->subject, u))
        throw RuleViolation("argument premises disagree on the argument term");
    if (arg_term && !identical(*arg_term, u))
      throw RuleViolation("arg_term differs from the argument premises' subject");
  } else if (arg_term) {
    u = *arg_term;
  } else {
    throw RuleViolation("an application with no argument premises needs arg_term");
  }
  std::vector<Derivation> premises;
  premises.reserve(args.size() + 1);
  premises.push_back(fun);
  premises.insert(premises.end(), args.begin(), args.end());
  return std::make_shared<DerivationNode>(Rule::AppE, conclusion_ctx(fun, args),
                                          app(fun->subject, u), fun->type->codomain,
                                          std::move(premises));
}

namespace {

void validate_node(const Derivation& d, const std::string& path) {
  auto fail = [&](const std::string& why) {
    throw RuleViolation("invalid derivation at [" + (path.empty() ? "root" : path) +
                        "]: " + why);
  };
  if (!d) fail("null node");
  switch (d->rule) {
    case Rule::Ax: {
      if (!d->premises.empty()) fail("ax has premises");
      if (d->subject->kind != TermKind::Var) fail("ax subject is not a variable");
      TypingContext expect = TypingContext::singleton(d->subject->name, {d->type});
      if (!ctx_eq(d->ctx, expect))
        fail("ax context is " + print_context(d->ctx) + ", expected " + print_context(expect));
      break;
    }
    case Rule::Val: {
      if (!d->premises.empty()) fail("val has premises");
      if (d->subject->kind != TermKind::Abs) fail("val subject is not an abstraction");
      if (!d->ctx.empty()) fail("val context is not empty");
      if (d->type->kind != TypeKind::Answer) fail("val type is not a");
      break;
    }
    case Rule::AbsI: {
      if (d->premises.size() != 1) fail("abs needs exactly one premise");
      if (d->subject->kind != TermKind::Abs) fail("abs subject is not an abstraction");
      const Derivation& body = d->premises[0];
      const std::string& x = d->subject->name;
      if (!identical(body->subject, d->subject->left))
        fail("premise subject is not the abstraction body");
      if (!ctx_eq(d->ctx, ctx_remove(body->ctx, x)))
        fail("conclusion context must drop " + x);
      if (!type_eq(d->type, arrow(body->ctx.lookup(x), body->type)))
        fail("conclusion type is " + print_type(d->type) + ", expected " +
             print_type(arrow(body->ctx.lookup(x), body->type)));
      validate_node(body, path.empty() ? "0" : path + ".0");
      break;
    }
    case Rule::AppE: {
      if (d->premises.empty()) fail("app needs a head premise");
      if (d->subject->kind != TermKind::App) fail("app subject is not an application");
      const Derivation& fun = d->premises[0];
      std::vector<Derivation> args(d->premises.begin() + 1, d->premises.end());
      if (!identical(fun->subject, d->subject->left))
        fail("head premise subject is not the function part");
      if (fun->type->kind != TypeKind::Arrow)
        fail("head premise has non-arrow type " + print_type(fun->type));
      if (!multiset_eq(fun->type->domain, premise_types(args)))
        fail("argument premises type " + print_multiset(premise_types(args)) +
             " but the head expects " + print_multiset(fun->type->domain));
      for (const auto& a : args)
        if (!identical(a->subject, d->subject->right))
          fail("argument premise subject is not the argument part");
      if (!type_eq(d->type, fun->type->codomain))
        fail("conclusion type is not the head codomain");
      if (!ctx_eq(d->ctx, conclusion_ctx(fun, args)))
        fail("conclusion context is not the premise sum");
      for (std::size_t i = 0; i < d->premises.size(); ++i)
        validate_node(d->premises[i], path.empty() ? std::to_string(i)
                                                   : path + "." + std::to_string(i));
      break;
    }
  }
}

}  // namespace

void validate(const Derivation& d) {
  if (d && !is_pure(d->subject))
    throw RuleViolation("derivation subjects must be closure-free");
  validate_node(d, "");
}

std::size_t deriv_size(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d->premises) n += deriv_size(p);
  return n;
}

bool deriv_eq(const Derivation& a, const Derivation& b) {
  if (a.get() == b.get()) return true;
  if (a->rule != b->rule || !identical(a->subject, b->subject) ||
      !type_eq(a->type, b->type) || !ctx_eq(a->ctx, b->ctx) ||
      a->premises.size() != b->premises.size())
    return false;
  for (std::size_t i = 0; i < a->premises.size(); ++i)
    if (!deriv_eq(a->premises[i], b->premises[i])) return false;
  return true;
}

std::string print_judgement(const Derivation& d) {
  std::string out;
  if (!d->ctx.empty()) out = print_context(d->ctx) + " ";
  return out + "|- " + print_term(d->subject) + " : " + print_type(d->type);
}

namespace {

void collect_toc(const Derivation& d, const Occurrence& here, OccurrenceSet& out) {
  out.insert(here);
  switch (d->rule) {
    case Rule::Ax:
    case Rule::Val:
      break;
    case Rule::AbsI:
      collect_toc(d->premises[0], here.child('0'), out);
      break;
    case Rule::AppE:
      collect_toc(d->premises[0], here.child('0'), out);
      for (std::size_t i = 1; i < d->premises.size(); ++i)
        collect_toc(d->premises[i], here.child('1'), out);
      break;
  }
}

bool collect_at(const Derivation& d, const Occurrence& p, std::size_t i,
                std::vector<Derivation>& out) {
  if (i == p.length()) {
    out.push_back(d);
    return true;
  }
  switch (d->rule) {
    case Rule::Ax:
    case Rule::Val:
      return false;
    case Rule::AbsI:
      return p.at(i) == '0' && collect_at(d->premises[0], p, i + 1, out);
    case Rule::AppE: {
      if (p.at(i) == '0') return collect_at(d->premises[0], p, i + 1, out);
      bool found = false;
      for (std::size_t j = 1; j < d->premises.size(); ++j)
        found = collect_at(d->premises[j], p, i + 1, out) || found;
      return found;
    }
  }
  return false;
}

Occurrence occ_suffix(const Occurrence& p, std::size_t i) {
  return Occurrence(p.word().substr(i));
}

Derivation replace_rec(const Derivation& d, const Occurrence& p, std::size_t i,
                       std::deque<Derivation>& queue, const Term& s) {
  if (i == p.length()) {
    if (queue.empty())
      throw RuleViolation("too few replacement derivations for " + p.display());
    Derivation out = queue.front();
    queue.pop_front();
    return out;
  }
  switch (d->rule) {
    case Rule::Ax:
      throw OccurrenceError("no position " + p.display() + " below a variable");
    case Rule::Val:
      return mk_val(replace_at(d->subject, occ_suffix(p, i), s));
    case Rule::AbsI: {
      if (p.at(i) != '0')
        throw OccurrenceError("no position " + p.display() + " in an abstraction");
      return mk_abs(d->subject->name, replace_rec(d->premises[0], p, i + 1, queue, s));
    }
    case Rule::AppE: {
      if (p.at(i) == '0') {
        Derivation fun = replace_rec(d->premises[0], p, i + 1, queue, s);
        std::vector<Derivation> args(d->premises.begin() + 1, d->premises.end());
        return mk_app(fun, args, d->subject->right);
      }
      std::vector<Derivation> args;
      args.reserve(d->premises.size() - 1);
      for (std::size_t j = 1; j < d->premises.size(); ++j)
        args.push_back(replace_rec(d->premises[j], p, i + 1, queue, s));
      Term u = replace_at(d->subject->right, occ_suffix(p, i + 1), s);
      return mk_app(d->premises[0], args, u);
    }
  }
  throw RuleViolation("unreachable");
}

}  // namespace

OccurrenceSet typed_occurrences(const Derivation& d) {
  OccurrenceSet out;
  collect_toc(d, Occurrence{}, out);
  return out;
}

std::vector<Derivation> tree_at(const Derivation& d, const Occurrence& p) {
  std::vector<Derivation> out;
  if (!collect_at(d, p, 0, out))
    throw NotTypedError(p.display() + " is not a typed occurrence of " +
                        print_term(d->subject));
  return out;
}

Derivation replace_at_derivation(const Derivation& d, const Occurrence& p,
                                 const std::vector<Derivation>& repl,
                                 std::optional<Term> repl_subject) {
  Term s;
  if (!repl.empty()) {
    s = repl.front()->subject;
    for (const auto& r : repl)
      if (!identical(r->subject, s))
        throw RuleViolation("replacement derivations disagree on their subject");
    if (repl_subject && !identical(*repl_subject, s))
      throw RuleViolation("repl_subject differs from the replacements' subject");
  } else if (repl_subject) {
    s = *repl_subject;
  } else {
    throw RuleViolation("an empty replacement needs repl_subject");
  }
  std::deque<Derivation> queue(repl.begin(), repl.end());
  Derivation out = replace_rec(d, p, 0, queue, s);
  if (!queue.empty())
    throw RuleViolation("too many replacement derivations for " + p.display());
  return out;
}

Occurrence maximal_typed_prefix(const Derivation& d, const Occurrence& p) {
  if (!has_occurrence(d->subject, p))
    throw OccurrenceError(p.display() + " is not a position of " + print_term(d->subject));
  OccurrenceSet toc = typed_occurrences(d);
  for (std::size_t len = p.length(); len > 0; --len) {
    Occurrence prefix(p.word().substr(0, len));
    if (toc.count(prefix)) return prefix;
  }
  return Occurrence{};
}

}  // namespace lamlab
