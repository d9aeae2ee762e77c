#include "rsc/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "rsc/error.hpp"

namespace rsc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  FieldElement parse_all() {
    FieldElement v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset_ + pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        FieldElement d = factor();
        if (d.is_zero()) throw ParseError(offset_ + at, "division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  FieldElement factor() {
    skip();
    if (accept('-')) return -factor();
    if (accept('(')) {
      FieldElement v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const bool negative = accept('-');
      mpz_class n = integer();
      expect(')');
      return FieldElement::sqrt_of(negative ? mpz_class(-n) : n);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return FieldElement(Rational(integer()));
    fail(pos_ == text_.size() ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_coeff(std::string_view text) { return Parser(text, 0).parse_all(); }

ExactCubic parse_cubic(std::string_view text) {
  std::vector<FieldElement> coeffs;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coeffs.push_back(Parser(piece, start).parse_all());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() != 4) throw ParseError(text.size(), "expected four coefficients 1,P,Q,R");
  if (coeffs[0] != FieldElement(1)) throw ParseError(0, "leading coefficient must be 1");
  return {coeffs[1], coeffs[2], coeffs[3]};
}

}  // namespace rsc
