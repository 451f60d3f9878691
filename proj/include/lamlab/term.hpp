#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lamlab {

struct LamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : LamError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : LamError(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct OccurrenceError : LamError {
  using LamError::LamError;
};

struct NotARedexError : LamError {
  using LamError::LamError;
};

// Terms are immutable and shared. A closure t[x/u] only shows up in the
// call-by-need machine; everything else works on closure-free terms and
// throws LamError when handed one.
enum class TermKind { Var, App, Abs, Sub };

class TermNode;
using Term = std::shared_ptr<const TermNode>;

class TermNode {
 public:
  TermKind kind;
  std::string name;  // Var: the variable; Abs/Sub: the binder
  Term left;         // App: function, Abs: body, Sub: body
  Term right;        // App: argument, Sub: bound term

  TermNode(TermKind k, std::string n, Term l, Term r)
      : kind(k), name(std::move(n)), left(std::move(l)), right(std::move(r)) {}
};

Term var(std::string name);
Term app(Term fun, Term arg);
Term abs(std::string binder, Term body);
Term closure(Term body, std::string binder, Term bound);  // body[binder/bound]

bool is_pure(const Term& t);
std::size_t term_size(const Term& t);

std::set<std::string> free_vars(const Term& t);
bool is_free_in(const std::string& x, const Term& t);
// Every name that appears anywhere, free or as a binder.
void collect_names(const Term& t, std::set<std::string>& out);
std::set<std::string> all_names(const Term& t);

// First of x1, x2, ... not in avoid.
std::string fresh_name(const std::set<std::string>& avoid);

// Strict structural equality, names included.
bool identical(const Term& a, const Term& b);

bool alpha_eq(const Term& a, const Term& b);
std::size_t alpha_hash(const Term& t);
// Renames binders to a canonical scheme so that
// alpha_eq(a, b) == identical(canonicalize(a), canonicalize(b)).
Term canonicalize(const Term& t);

// Capture-free substitution t{x := value}. Binders are renamed (to fresh
// counter names) only when they would capture a free variable of value;
// the result is a pure function of the arguments.
Term substitute(const Term& t, const std::string& x, const Term& value);

std::string print_term(const Term& t);

// Surface syntax: `\x. t` or `λx. t`, juxtaposition binds left, `t[x/u]`
// closures only with allow_closures.
Term parse_term(std::string_view src, bool allow_closures = false);

}  // namespace lamlab
