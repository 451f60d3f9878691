#pragma once

#include <optional>
#include <vector>

#include "lamlab/occurrence.hpp"
#include "lamlab/types.hpp"

namespace lamlab {

struct NotTypedError : LamError {
  using LamError::LamError;
};

// ax:    x:[t] |- x : t
// val:   |- \x.b : a
// abs_i: G\x |- \x.b : G(x)->t        premises: [body]
// app_e: G + sum(D_i) |- b u : t      premises: [fun, arg...], fun typed at
//        [s_i]->t and each arg premise types u at one s_i
enum class Rule { Ax, Val, AbsI, AppE };

const char* to_string(Rule r);

class DerivationNode;
using Derivation = std::shared_ptr<const DerivationNode>;

class DerivationNode {
 public:
  Rule rule;
  TypingContext ctx;
  Term subject;
  VType type;
  std::vector<Derivation> premises;

  DerivationNode(Rule r, TypingContext c, Term s, VType t, std::vector<Derivation> p)
      : rule(r), ctx(std::move(c)), subject(std::move(s)), type(std::move(t)),
        premises(std::move(p)) {}
};

// Constructors compute the conclusion from the premises and throw
// RuleViolation when the pieces do not fit. Argument premises of an
// application must all carry the identical subject; arg_term supplies it
// when there are none.
Derivation mk_ax(const std::string& x, const VType& t);
Derivation mk_val(const Term& lam);
Derivation mk_abs(const std::string& x, const Derivation& body);
Derivation mk_app(const Derivation& fun, const std::vector<Derivation>& args,
                  std::optional<Term> arg_term = std::nullopt);

// Recheck every node of a hand-built or deserialized tree.
void validate(const Derivation& d);

std::size_t deriv_size(const Derivation& d);
bool deriv_eq(const Derivation& a, const Derivation& b);
std::string print_judgement(const Derivation& d);

// Positions of the subject whose subterm is typed somewhere in d:
// ax/val give {e}, abs descends with 0, app descends with 0 into the
// function and 1 into every argument premise.
OccurrenceSet typed_occurrences(const Derivation& d);

// The multiset of subderivations sitting at typed occurrence p.
std::vector<Derivation> tree_at(const Derivation& d, const Occurrence& p);

// Swap the subderivations at p for repl (consumed left-to-right across
// argument premises) and rewrite untyped copies of the subterm at p
// textually to the replacements' common subject; repl_subject supplies that
// subject when repl is empty.
Derivation replace_at_derivation(const Derivation& d, const Occurrence& p,
                                 const std::vector<Derivation>& repl,
                                 std::optional<Term> repl_subject = std::nullopt);

// Longest prefix of p that is a typed occurrence; p must be a position of
// the subject.
Occurrence maximal_typed_prefix(const Derivation& d, const Occurrence& p);

}  // namespace lamlab
