#include "aluffi/term_order.hpp"

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

// Reverse-lexicographic tie break on lanes [first, last): the monomial with
// the smaller exponent in the last differing variable is the greater one.
int revlex_tail(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last) {
  for (std::size_t i = last; i-- > first;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_block(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last) {
  const auto da = block_degree(a, first, last);
  const auto db = block_degree(b, first, last);
  if (da != db) return da > db ? 1 : -1;
  return revlex_tail(a, b, first, last);
}

}  // namespace

TermOrder TermOrder::from_name(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "grevlex") return grevlex();
  throw PreconditionError("unknown term order '" + name + "'");
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      return 0;
    case Kind::grevlex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      return revlex_tail(a, b, 0, kMaxVars);
    case Kind::elimination:
      if (int c = grevlex_block(a, b, 0, block_); c != 0) return c;
      return grevlex_block(a, b, block_, kMaxVars);
  }
  return 0;
}

}  // namespace aluffi
