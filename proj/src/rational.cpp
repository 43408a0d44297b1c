#include "superlie/rational.hpp"

#include <cctype>

#include "superlie/error.hpp"

namespace superlie {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  Rational value;
  value.get_num() = mpz_class(std::string(num));
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    if (den.front() == '+') den.remove_prefix(1);
    const mpz_class d{std::string(den)};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    value.get_den() = d;
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace superlie
