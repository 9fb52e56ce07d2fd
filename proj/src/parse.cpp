#include <cctype>
#include <string>

#include "aluffi/errors.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

namespace {

// poly   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' uint)?
// atom   := 'x' uint | int ('/' uint)? | '(' poly ')'
class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long small_uint(const std::string& s, unsigned long limit) {
    if (s.size() > 6 || std::stoul(s) > limit) fail("integer " + s + " too large");
    return std::stoul(s);
  }

  Polynomial poly() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    const char next = peek();
    if (next == 'x' || next == '(' || std::isdigit(static_cast<unsigned char>(next)))
      fail("implicit multiplication is not allowed; use '*'");
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const auto e = small_uint(digits(), 65535);
    Polynomial result = Polynomial::constant(ring_, 1);
    for (unsigned long k = 0; k < e; ++k) result = result * base;
    return result;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t at = pos_;
      const auto idx = small_uint(digits(), kMaxVars);
      if (idx >= ring_.num_vars()) {
        pos_ = at;
        fail("unknown variable x" + std::to_string(idx) + " (ring has " + std::to_string(ring_.num_vars()) +
             " variables)");
      }
      return Polynomial::variable(ring_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = mpz_class(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      Coefficient q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const PolyRing& ring) { return Parser(text, ring).parse(); }

}  // namespace aluffi
