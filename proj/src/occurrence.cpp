#include "lamlab/occurrence.hpp"

#include <vector>

namespace lamlab {

Occurrence::Occurrence(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != '0' && c != '1')
      throw OccurrenceError("occurrence words are over {0,1}, got '" + word_ + "'");
}

Occurrence Occurrence::parse(std::string_view text) {
  if (text == "e" || text == "ε" || text.empty()) return Occurrence();
  return Occurrence(std::string(text));
}

Occurrence Occurrence::child(char bit) const {
  Occurrence out = *this;
  out.word_.push_back(bit);
  return out;
}

Occurrence Occurrence::operator+(const Occurrence& rest) const {
  Occurrence out = *this;
  out.word_ += rest.word_;
  return out;
}

bool Occurrence::prefix_of(const Occurrence& other) const {
  return other.word_.size() >= word_.size() &&
         other.word_.compare(0, word_.size(), word_) == 0;
}

bool Occurrence::proper_prefix_of(const Occurrence& other) const {
  return word_.size() < other.word_.size() && prefix_of(other);
}

Occurrence Occurrence::suffix_after(const Occurrence& prefix) const {
  if (!prefix.prefix_of(*this))
    throw OccurrenceError("'" + prefix.display() + "' is not a prefix of '" + display() + "'");
  return Occurrence(word_.substr(prefix.word_.size()));
}

std::string display(const OccurrenceSet& occs) {
  std::string out = "{";
  bool first = true;
  for (const auto& o : occs) {
    if (!first) out += ", ";
    out += o.display();
    first = false;
  }
  out += "}";
  return out;
}

namespace {

void occurrences_rec(const Term& t, std::string& path, OccurrenceSet& out) {
  out.insert(Occurrence(path));
  switch (t->kind) {
    case TermKind::Var:
      return;
    case TermKind::App:
      path.push_back('0');
      occurrences_rec(t->left, path, out);
      path.back() = '1';
      occurrences_rec(t->right, path, out);
      path.pop_back();
      return;
    case TermKind::Abs:
      path.push_back('0');
      occurrences_rec(t->left, path, out);
      path.pop_back();
      return;
    case TermKind::Sub:
      throw LamError("occurrences: positions are only defined for closure-free terms");
  }
}

}  // namespace

OccurrenceSet occurrences(const Term& t) {
  OccurrenceSet out;
  std::string path;
  occurrences_rec(t, path, out);
  return out;
}

Term subterm_at(const Term& t, const Occurrence& p) {
  Term cur = t;
  for (std::size_t i = 0; i < p.length(); ++i) {
    char bit = p.at(i);
    switch (cur->kind) {
      case TermKind::Var:
        throw OccurrenceError("no subterm at " + p.display() + " in " + print_term(t));
      case TermKind::App:
        cur = bit == '0' ? cur->left : cur->right;
        break;
      case TermKind::Abs:
        if (bit == '1')
          throw OccurrenceError("no subterm at " + p.display() + " in " + print_term(t));
        cur = cur->left;
        break;
      case TermKind::Sub:
        throw LamError("subterm_at: positions are only defined for closure-free terms");
    }
  }
  return cur;
}

bool has_occurrence(const Term& t, const Occurrence& p) {
  Term cur = t;
  for (std::size_t i = 0; i < p.length(); ++i) {
    char bit = p.at(i);
    switch (cur->kind) {
      case TermKind::Var: return false;
      case TermKind::App:
        cur = bit == '0' ? cur->left : cur->right;
        break;
      case TermKind::Abs:
        if (bit == '1') return false;
        cur = cur->left;
        break;
      case TermKind::Sub:
        throw LamError("has_occurrence: positions are only defined for closure-free terms");
    }
  }
  return true;
}

namespace {

Term replace_rec(const Term& t, const Occurrence& p, std::size_t i, const Term& replacement) {
  if (i == p.length()) return replacement;
  char bit = p.at(i);
  switch (t->kind) {
    case TermKind::Var:
      throw OccurrenceError("no subterm at " + p.display());
    case TermKind::App:
      if (bit == '0') return app(replace_rec(t->left, p, i + 1, replacement), t->right);
      return app(t->left, replace_rec(t->right, p, i + 1, replacement));
    case TermKind::Abs:
      if (bit == '1') throw OccurrenceError("no subterm at " + p.display());
      return abs(t->name, replace_rec(t->left, p, i + 1, replacement));
    case TermKind::Sub:
      throw LamError("replace_at: positions are only defined for closure-free terms");
  }
  return t;
}

}  // namespace

Term replace_at(const Term& t, const Occurrence& p, const Term& replacement) {
  return replace_rec(t, p, 0, replacement);
}

const char* NamedContext::hole_marker() { return "_"; }

namespace {

void find_holes(const Term& t, std::string& path, std::vector<Occurrence>& found) {
  switch (t->kind) {
    case TermKind::Var:
      if (t->name == NamedContext::hole_marker()) found.emplace_back(path);
      return;
    case TermKind::App:
      path.push_back('0');
      find_holes(t->left, path, found);
      path.back() = '1';
      find_holes(t->right, path, found);
      path.pop_back();
      return;
    case TermKind::Abs:
      path.push_back('0');
      find_holes(t->left, path, found);
      path.pop_back();
      return;
    case TermKind::Sub:
      throw LamError("contexts are closure-free");
  }
}

}  // namespace

NamedContext::NamedContext(Term skeleton) : skeleton_(std::move(skeleton)) {
  std::vector<Occurrence> found;
  std::string path;
  find_holes(skeleton_, path, found);
  if (found.size() != 1)
    throw LamError("a context needs exactly one hole, found " + std::to_string(found.size()));
  hole_ = found.front();
}

Term NamedContext::plug(const Term& t) const { return replace_at(skeleton_, hole_, t); }

}  // namespace lamlab
