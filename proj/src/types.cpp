#include "lamlab/types.hpp"

#include <algorithm>

namespace lamlab {

VType answer() {
  static const VType a = std::make_shared<VTypeNode>(TypeKind::Answer, "", MultisetType{}, nullptr);
  return a;
}

VType base(std::string name) {
  return std::make_shared<VTypeNode>(TypeKind::Base, std::move(name), MultisetType{}, nullptr);
}

VType arrow(MultisetType domain, VType codomain) {
  return std::make_shared<VTypeNode>(TypeKind::Arrow, "",
                                     canonical_multiset(std::move(domain)),
                                     std::move(codomain));
}

int type_cmp(const VType& a, const VType& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case TypeKind::Answer:
      return 0;
    case TypeKind::Base:
      return a->base.compare(b->base);
    case TypeKind::Arrow: {
      if (a->domain.size() != b->domain.size())
        return a->domain.size() < b->domain.size() ? -1 : 1;
      for (std::size_t i = 0; i < a->domain.size(); ++i)
        if (int c = type_cmp(a->domain[i], b->domain[i])) return c;
      return type_cmp(a->codomain, b->codomain);
    }
  }
  return 0;
}

bool type_eq(const VType& a, const VType& b) { return type_cmp(a, b) == 0; }

MultisetType canonical_multiset(MultisetType ms) {
  std::sort(ms.begin(), ms.end(),
            [](const VType& a, const VType& b) { return type_cmp(a, b) < 0; });
  return ms;
}

bool multiset_eq(const MultisetType& a, const MultisetType& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!type_eq(a[i], b[i])) return false;
  return true;
}

std::string print_type(const VType& t) {
  switch (t->kind) {
    case TypeKind::Answer:
      return "a";
    case TypeKind::Base:
      return t->base;
    case TypeKind::Arrow:
      return print_multiset(t->domain) + "->" + print_type(t->codomain);
  }
  return "?";
}

std::string print_multiset(const MultisetType& ms) {
  std::string out = "[";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ",";
    out += print_type(ms[i]);
  }
  return out + "]";
}

TypingContext TypingContext::singleton(const std::string& x, MultisetType ms) {
  TypingContext ctx;
  ctx.assign(x, std::move(ms));
  return ctx;
}

const MultisetType& TypingContext::lookup(const std::string& x) const {
  static const MultisetType kEmpty;
  auto it = entries_.find(x);
  return it == entries_.end() ? kEmpty : it->second;
}

void TypingContext::assign(const std::string& x, MultisetType ms) {
  if (ms.empty())
    entries_.erase(x);
  else
    entries_[x] = canonical_multiset(std::move(ms));
}

TypingContext ctx_sum(const TypingContext& a, const TypingContext& b) {
  TypingContext out = a;
  for (const auto& [x, ms] : b.entries()) {
    MultisetType joined = out.lookup(x);
    joined.insert(joined.end(), ms.begin(), ms.end());
    out.assign(x, std::move(joined));
  }
  return out;
}

TypingContext ctx_remove(const TypingContext& ctx, const std::string& x) {
  TypingContext out = ctx;
  out.assign(x, {});
  return out;
}

bool ctx_eq(const TypingContext& a, const TypingContext& b) {
  if (a.entries().size() != b.entries().size()) return false;
  auto ia = a.entries().begin();
  for (const auto& [x, ms] : b.entries()) {
    if (ia->first != x || !multiset_eq(ia->second, ms)) return false;
    ++ia;
  }
  return true;
}

std::string print_context(const TypingContext& ctx) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, ms] : ctx.entries()) {
    if (!first) out += ", ";
    first = false;
    out += x + ":" + print_multiset(ms);
  }
  return out + "}";
}

}  // namespace lamlab
