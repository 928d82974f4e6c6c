#include "homkernel/cas/parser.hpp"

#include <algorithm>
#include <cctype>

#include "homkernel/errors.hpp"

namespace homkernel::cas {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& params) : src_(src), params_(params) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"operator", "end of input"});
    return v;
  }

 private:
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v *= unary();
      } else if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        Scalar d = unary();
        if (d.is_zero())
          throw DivisionByZeroConstant("denominator at position " + std::to_string(at) + " is identically zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"nonnegative integer exponent"});
    mpz_class e = integer();
    if (e > 64) throw Error("exponent too large at position " + std::to_string(pos_));
    return base.pow(static_cast<std::uint32_t>(e.get_ui()));
  }

  Scalar primary() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (std::find(params_.begin(), params_.end(), name) == params_.end()) throw UnknownParameter(name);
      return Scalar::param(name);
    }
    if (accept('(')) {
      Scalar v = expr();
      skip_ws();
      if (!accept(')')) fail({"')'", "operator"});
      return v;
    }
    fail({"integer", "identifier", "'('", "'-'"});
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c || pos_ >= src_.size()) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  std::string_view src_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_expr(std::string_view src, const std::vector<std::string>& params) {
  return Parser(src, params).parse();
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace homkernel::cas
