#include "aluffi/coefficient.hpp"

#include <cctype>

#include "aluffi/errors.hpp"

namespace aluffi {

std::string format_coefficient(const Coefficient& c) { return c.get_str(); }

Coefficient parse_coefficient(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Coefficient c;
  c.get_num() = mpz_class(n, 10);
  c.get_den() = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (c.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  c.canonicalize();
  return c;
}

}  // namespace aluffi
