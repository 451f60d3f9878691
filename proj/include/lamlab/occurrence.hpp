#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>

#include "lamlab/term.hpp"

namespace lamlab {

// A position in a term: a word over {0,1}. ε is the root, 0 goes to the
// function of an application or the body of an abstraction, 1 goes to the
// argument. Ordering is plain lexicographic, which on redex occurrences
// coincides with the to-the-left order.
class Occurrence {
 public:
  Occurrence() = default;
  explicit Occurrence(std::string word);

  // "e" (or the empty string) denotes ε.
  static Occurrence parse(std::string_view text);

  bool is_root() const { return word_.empty(); }
  std::size_t length() const { return word_.size(); }
  char at(std::size_t i) const { return word_[i]; }

  Occurrence child(char bit) const;
  Occurrence operator+(const Occurrence& rest) const;

  bool prefix_of(const Occurrence& other) const;         // reflexive
  bool proper_prefix_of(const Occurrence& other) const;
  // The suffix q such that *this + q == other; requires prefix_of(other).
  Occurrence suffix_after(const Occurrence& prefix) const;

  const std::string& word() const { return word_; }
  std::string display() const { return word_.empty() ? "e" : word_; }

  auto operator<=>(const Occurrence&) const = default;

 private:
  std::string word_;
};

using OccurrenceSet = std::set<Occurrence>;

std::string display(const OccurrenceSet& occs);

// All positions of a closure-free term.
OccurrenceSet occurrences(const Term& t);

// Throws OccurrenceError if p is not a position of t.
Term subterm_at(const Term& t, const Occurrence& p);
bool has_occurrence(const Term& t, const Occurrence& p);

// Textual replacement of the subterm at p: free variables of the
// replacement are captured by whatever binders enclose p.
Term replace_at(const Term& t, const Occurrence& p, const Term& replacement);

// A term with a single hole, plugged by capture-permitting replacement.
// The hole is the reserved variable "_".
class NamedContext {
 public:
  static const char* hole_marker();
  explicit NamedContext(Term skeleton);

  const Term& skeleton() const { return skeleton_; }
  const Occurrence& hole() const { return hole_; }
  Term plug(const Term& t) const;

 private:
  Term skeleton_;
  Occurrence hole_;
};

}  // namespace lamlab
