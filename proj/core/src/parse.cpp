#include <cctype>

#include "hyperdef/scalar.hpp"

namespace hyperdef {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := ('+'|'-') unary | atom
// atom   := number | sqrtN | 'sqrt' '(' expr ')' | '(' expr ')'
class ExactParser {
 public:
  explicit ExactParser(std::string_view s) : s_(s) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PreconditionError("cannot parse exact value '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  FieldElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }
  FieldElem atom() {
    skip();
    if (eat('(')) {
      FieldElem v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return FieldElem(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      FieldElem arg;
      if (eat('(')) {
        arg = expr();
        if (!eat(')')) fail("missing ')'");
      } else {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected sqrt2, sqrt5, sqrt10 or sqrt(...)");
        arg = FieldElem(parse_rational(s_.substr(start, pos_ - start)));
      }
      auto r = field_sqrt(arg);
      if (!r) fail("sqrt(" + arg.str() + ") is not in Q(sqrt2,sqrt5)");
      return *r;
    }
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

FieldElem parse_exact(std::string_view text) { return ExactParser(text).parse(); }

}  // namespace hyperdef
