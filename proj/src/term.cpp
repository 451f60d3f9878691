#include "lamlab/term.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace lamlab {

Term var(std::string name) {
  return std::make_shared<TermNode>(TermKind::Var, std::move(name), nullptr, nullptr);
}

Term app(Term fun, Term arg) {
  return std::make_shared<TermNode>(TermKind::App, "", std::move(fun), std::move(arg));
}

Term abs(std::string binder, Term body) {
  return std::make_shared<TermNode>(TermKind::Abs, std::move(binder), std::move(body), nullptr);
}

Term closure(Term body, std::string binder, Term bound) {
  return std::make_shared<TermNode>(TermKind::Sub, std::move(binder), std::move(body),
                                    std::move(bound));
}

bool is_pure(const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::App: return is_pure(t->left) && is_pure(t->right);
    case TermKind::Abs: return is_pure(t->left);
    case TermKind::Sub: return false;
  }
  return false;
}

std::size_t term_size(const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return 1;
    case TermKind::App: return 1 + term_size(t->left) + term_size(t->right);
    case TermKind::Abs: return 1 + term_size(t->left);
    case TermKind::Sub: return 1 + term_size(t->left) + term_size(t->right);
  }
  return 0;
}

namespace {

void free_vars_rec(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermKind::App:
      free_vars_rec(t->left, bound, out);
      free_vars_rec(t->right, bound, out);
      return;
    case TermKind::Abs: {
      bool fresh = bound.insert(t->name).second;
      free_vars_rec(t->left, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case TermKind::Sub: {
      // body[x/u]: x is bound in the body only
      free_vars_rec(t->right, bound, out);
      bool fresh = bound.insert(t->name).second;
      free_vars_rec(t->left, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

bool is_free_in(const std::string& x, const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return t->name == x;
    case TermKind::App: return is_free_in(x, t->left) || is_free_in(x, t->right);
    case TermKind::Abs: return t->name != x && is_free_in(x, t->left);
    case TermKind::Sub:
      return is_free_in(x, t->right) || (t->name != x && is_free_in(x, t->left));
  }
  return false;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      out.insert(t->name);
      return;
    case TermKind::App:
      collect_names(t->left, out);
      collect_names(t->right, out);
      return;
    case TermKind::Abs:
      out.insert(t->name);
      collect_names(t->left, out);
      return;
    case TermKind::Sub:
      out.insert(t->name);
      collect_names(t->left, out);
      collect_names(t->right, out);
      return;
  }
}

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  collect_names(t, out);
  return out;
}

std::string fresh_name(const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string candidate = "x" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

bool identical(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->name == b->name;
    case TermKind::App: return identical(a->left, b->left) && identical(a->right, b->right);
    case TermKind::Abs: return a->name == b->name && identical(a->left, b->left);
    case TermKind::Sub:
      return a->name == b->name && identical(a->left, b->left) && identical(a->right, b->right);
  }
  return false;
}

namespace {

// de Bruijn style comparison: binders are matched by level.
bool alpha_eq_rec(const Term& a, const Term& b, std::map<std::string, int>& la,
                  std::map<std::string, int>& lb, int depth) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: {
      auto ia = la.find(a->name);
      auto ib = lb.find(b->name);
      if ((ia == la.end()) != (ib == lb.end())) return false;
      if (ia == la.end()) return a->name == b->name;  // both free
      return ia->second == ib->second;
    }
    case TermKind::App:
      return alpha_eq_rec(a->left, b->left, la, lb, depth) &&
             alpha_eq_rec(a->right, b->right, la, lb, depth);
    case TermKind::Abs: {
      auto sa = la.find(a->name);
      auto sb = lb.find(b->name);
      int olda = sa == la.end() ? -1 : sa->second;
      int oldb = sb == lb.end() ? -1 : sb->second;
      la[a->name] = depth;
      lb[b->name] = depth;
      bool ok = alpha_eq_rec(a->left, b->left, la, lb, depth + 1);
      if (olda < 0) la.erase(a->name); else la[a->name] = olda;
      if (oldb < 0) lb.erase(b->name); else lb[b->name] = oldb;
      return ok;
    }
    case TermKind::Sub: {
      if (!alpha_eq_rec(a->right, b->right, la, lb, depth)) return false;
      auto sa = la.find(a->name);
      auto sb = lb.find(b->name);
      int olda = sa == la.end() ? -1 : sa->second;
      int oldb = sb == lb.end() ? -1 : sb->second;
      la[a->name] = depth;
      lb[b->name] = depth;
      bool ok = alpha_eq_rec(a->left, b->left, la, lb, depth + 1);
      if (olda < 0) la.erase(a->name); else la[a->name] = olda;
      if (oldb < 0) lb.erase(b->name); else lb[b->name] = oldb;
      return ok;
    }
  }
  return false;
}

void alpha_print_rec(const Term& t, std::map<std::string, int>& levels, int depth,
                     std::string& out) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = levels.find(t->name);
      if (it == levels.end()) {
        out += 'f';
        out += t->name;
      } else {
        out += 'b';
        out += std::to_string(depth - 1 - it->second);
      }
      out += ';';
      return;
    }
    case TermKind::App:
      out += '@';
      alpha_print_rec(t->left, levels, depth, out);
      alpha_print_rec(t->right, levels, depth, out);
      return;
    case TermKind::Abs: {
      out += 'L';
      auto it = levels.find(t->name);
      int old = it == levels.end() ? -1 : it->second;
      levels[t->name] = depth;
      alpha_print_rec(t->left, levels, depth + 1, out);
      if (old < 0) levels.erase(t->name); else levels[t->name] = old;
      return;
    }
    case TermKind::Sub: {
      out += 'S';
      alpha_print_rec(t->right, levels, depth, out);
      auto it = levels.find(t->name);
      int old = it == levels.end() ? -1 : it->second;
      levels[t->name] = depth;
      alpha_print_rec(t->left, levels, depth + 1, out);
      if (old < 0) levels.erase(t->name); else levels[t->name] = old;
      return;
    }
  }
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  std::map<std::string, int> la, lb;
  return alpha_eq_rec(a, b, la, lb, 0);
}

std::size_t alpha_hash(const Term& t) {
  std::map<std::string, int> levels;
  std::string repr;
  repr.reserve(64);
  alpha_print_rec(t, levels, 0, repr);
  return std::hash<std::string>{}(repr);
}

namespace {

Term canonicalize_rec(const Term& t, std::map<std::string, std::string>& renames, int& counter) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = renames.find(t->name);
      return it == renames.end() ? t : var(it->second);
    }
    case TermKind::App: {
      Term l = canonicalize_rec(t->left, renames, counter);
      Term r = canonicalize_rec(t->right, renames, counter);
      return app(l, r);
    }
    case TermKind::Abs: {
      std::string canon = "#" + std::to_string(counter++);
      auto it = renames.find(t->name);
      std::string old = it == renames.end() ? std::string() : it->second;
      renames[t->name] = canon;
      Term body = canonicalize_rec(t->left, renames, counter);
      if (old.empty()) renames.erase(t->name); else renames[t->name] = old;
      return abs(canon, body);
    }
    case TermKind::Sub: {
      Term bound = canonicalize_rec(t->right, renames, counter);
      std::string canon = "#" + std::to_string(counter++);
      auto it = renames.find(t->name);
      std::string old = it == renames.end() ? std::string() : it->second;
      renames[t->name] = canon;
      Term body = canonicalize_rec(t->left, renames, counter);
      if (old.empty()) renames.erase(t->name); else renames[t->name] = old;
      return closure(body, canon, bound);
    }
  }
  return t;
}

}  // namespace

Term canonicalize(const Term& t) {
  std::map<std::string, std::string> renames;
  int counter = 0;
  return canonicalize_rec(t, renames, counter);
}

Term substitute(const Term& t, const std::string& x, const Term& value) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? value : t;
    case TermKind::App: {
      if (!is_free_in(x, t)) return t;
      return app(substitute(t->left, x, value), substitute(t->right, x, value));
    }
    case TermKind::Abs: {
      if (t->name == x || !is_free_in(x, t->left)) return t;
      if (is_free_in(t->name, value)) {
        std::set<std::string> avoid = all_names(t->left);
        collect_names(value, avoid);
        avoid.insert(x);
        avoid.insert(t->name);
        std::string renamed = fresh_name(avoid);
        Term body = substitute(t->left, t->name, var(renamed));
        return abs(renamed, substitute(body, x, value));
      }
      return abs(t->name, substitute(t->left, x, value));
    }
    case TermKind::Sub: {
      Term bound = is_free_in(x, t->right) ? substitute(t->right, x, value) : t->right;
      if (t->name == x || !is_free_in(x, t->left))
        return closure(t->left, t->name, bound);
      if (is_free_in(t->name, value)) {
        std::set<std::string> avoid = all_names(t->left);
        collect_names(value, avoid);
        avoid.insert(x);
        avoid.insert(t->name);
        std::string renamed = fresh_name(avoid);
        Term body = substitute(t->left, t->name, var(renamed));
        return closure(substitute(body, x, value), renamed, bound);
      }
      return closure(substitute(t->left, x, value), t->name, bound);
    }
  }
  return t;
}

namespace {

// Precedence: closures are postfix on atoms, application folds left,
// abstraction extends as far right as possible.
void print_rec(const Term& t, int level, std::string& out) {
  // level 0: full term, 1: application operand position, 2: atom position
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Abs:
      if (level > 0) out += '(';
      out += "\\";
      out += t->name;
      out += ". ";
      print_rec(t->left, 0, out);
      if (level > 0) out += ')';
      return;
    case TermKind::App: {
      if (level > 1) out += '(';
      print_rec(t->left, 1, out);
      out += ' ';
      print_rec(t->right, 2, out);
      if (level > 1) out += ')';
      return;
    }
    case TermKind::Sub: {
      print_rec(t->left, 2, out);
      out += '[';
      out += t->name;
      out += '/';
      print_rec(t->right, 0, out);
      out += ']';
      return;
    }
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_rec(t, 0, out);
  return out;
}

}  // namespace lamlab
