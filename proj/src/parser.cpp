#include <cctype>
#include <optional>

#include "lamlab/term.hpp"

namespace lamlab {

namespace {

class Parser {
 public:
  Parser(std::string_view src, bool allow_closures)
      : src_(src), allow_closures_(allow_closures) {}

  Term run() {
    Term t = term();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  std::string_view src_;
  bool allow_closures_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
  }

  // '\' or the two-byte UTF-8 lambda
  bool eat_lambda() {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '\\') {
      ++pos_;
      return true;
    }
    if (pos_ + 1 < src_.size() && static_cast<unsigned char>(src_[pos_]) == 0xCE &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  std::optional<std::string> ident() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
      return std::nullopt;
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
        ++pos_;
      else
        break;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Term term() {
    if (eat_lambda()) {
      auto binder = ident();
      if (!binder) throw ParseError("expected a binder after lambda", pos_);
      expect('.', "after the binder");
      return abs(*binder, term());
    }
    return application();
  }

  Term application() {
    Term acc = atom_or_fail();
    while (true) {
      auto next = atom();
      if (!next) return acc;
      acc = app(acc, *next);
    }
  }

  Term atom_or_fail() {
    auto a = atom();
    if (!a) throw ParseError("expected a term", pos_);
    return *a;
  }

  std::optional<Term> atom() {
    skip_ws();
    std::optional<Term> base;
    if (eat('(')) {
      Term inner = term();
      expect(')', "to close the parenthesis");
      base = inner;
    } else if (pos_ < src_.size() &&
               (std::isalpha(static_cast<unsigned char>(src_[pos_])))) {
      base = var(*ident());
    } else if (pos_ < src_.size() && src_[pos_] == '_') {
      // the context hole
      ++pos_;
      if (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                 src_[pos_] == '_' || src_[pos_] == '\''))
        throw ParseError("'_' is reserved for the context hole", pos_);
      base = var("_");
    } else if (eat_lambda()) {
      // allow an unparenthesised abstraction only in head position; here it
      // would swallow the rest, so reject it as an atom
      throw ParseError("an abstraction argument needs parentheses", pos_);
    } else {
      return std::nullopt;
    }
    // closure postfixes bind tightest: t[x/u][y/v]
    while (true) {
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != '[') break;
      if (!allow_closures_)
        throw ParseError("closures t[x/u] are not allowed here", pos_);
      ++pos_;
      auto binder = ident();
      if (!binder) throw ParseError("expected a binder inside [ /", pos_);
      expect('/', "between binder and bound term");
      Term bound = term();
      expect(']', "to close the closure");
      base = closure(*base, *binder, bound);
    }
    return base;
  }
};

}  // namespace

Term parse_term(std::string_view src, bool allow_closures) {
  return Parser(src, allow_closures).run();
}

}  // namespace lamlab
