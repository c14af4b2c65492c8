#include "bsw/parse.hpp"

#include <cctype>

namespace bsw {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MRat parse() {
    MRat r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + s_ + "' at column " + std::to_string(i_ + 1) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MRat expr() {
    MRat r;
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  MRat term() {
    MRat r = factor();
    for (;;) {
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        MRat d = factor();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  long integer() {
    bool paren = eat('(');
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    std::size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) fail("expected integer exponent");
    long v = std::stol(s_.substr(st, i_ - st));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -v : v;
  }

  MRat factor() {
    MRat b = atom();
    if (eat('^')) {
      long k = integer();
      if (k < 0 && b.is_zero()) fail("zero to a negative power");
      b = b.pow(static_cast<int>(k));
    }
    return b;
  }

  MRat atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MRat r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return MRat(mpq_class(mpz_class(s_.substr(st, i_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string name = s_.substr(st, i_ - st);
      int v = var_index(name);
      if (v < 0) fail("unknown variable '" + name + "'");
      return MRat::var(v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

MRat parse_mrat(const std::string& text) { return Parser(text).parse(); }

}  // namespace bsw
