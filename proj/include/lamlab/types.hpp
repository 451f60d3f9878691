#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lamlab/term.hpp"

namespace lamlab {

struct RuleViolation : LamError {
  using LamError::LamError;
};

// Strict types: a multiset never sits in codomain position. Answer is the
// constant type of abstractions-as-values, printed `a`.
enum class TypeKind { Answer, Base, Arrow };

class VTypeNode;
using VType = std::shared_ptr<const VTypeNode>;

// Multisets carry their canonical (sorted) representation so that equality
// is plain element-wise comparison.
using MultisetType = std::vector<VType>;

class VTypeNode {
 public:
  TypeKind kind;
  std::string base;      // Base: the type variable
  MultisetType domain;   // Arrow
  VType codomain;        // Arrow

  VTypeNode(TypeKind k, std::string b, MultisetType d, VType c)
      : kind(k), base(std::move(b)), domain(std::move(d)), codomain(std::move(c)) {}
};

VType answer();
VType base(std::string name);
VType arrow(MultisetType domain, VType codomain);  // canonicalizes the domain

// Total order used for canonical multiset representation.
int type_cmp(const VType& a, const VType& b);
bool type_eq(const VType& a, const VType& b);

MultisetType canonical_multiset(MultisetType ms);
bool multiset_eq(const MultisetType& a, const MultisetType& b);

std::string print_type(const VType& t);
std::string print_multiset(const MultisetType& ms);

// Finite map from variables to multiset types; variables mapped to the
// empty multiset are not stored, so the domain is exactly the keys.
class TypingContext {
 public:
  TypingContext() = default;

  static TypingContext singleton(const std::string& x, MultisetType ms);

  // Empty multiset when absent.
  const MultisetType& lookup(const std::string& x) const;
  bool contains(const std::string& x) const { return entries_.count(x) > 0; }
  bool empty() const { return entries_.empty(); }

  const std::map<std::string, MultisetType>& entries() const { return entries_; }

  void assign(const std::string& x, MultisetType ms);  // drops empty multisets

 private:
  std::map<std::string, MultisetType> entries_;
};

// Pointwise multiset union.
TypingContext ctx_sum(const TypingContext& a, const TypingContext& b);
TypingContext ctx_remove(const TypingContext& ctx, const std::string& x);
bool ctx_eq(const TypingContext& a, const TypingContext& b);
std::string print_context(const TypingContext& ctx);

}  // namespace lamlab
