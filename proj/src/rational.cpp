#include "rellandau/rational.hpp"

#include <cctype>
#include <string>

#include "rellandau/errors.hpp"

namespace rellandau {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Decimal digits only; cpp_int would read a leading zero as an octal prefix.
BigInt parse_integer(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(s.substr(first)));
}

BigInt pow10(long long exponent) {
  BigInt r = 1;
  for (long long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw ConfigError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d = parse_integer(den);
    if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_integer(num), d);
  } else {
    std::string_view mantissa = s;
    long long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 4) bad(text);
      exponent = std::stoll(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt numerator = parse_integer(digits);
    exponent -= static_cast<long long>(frac_part.size());
    if (exponent >= 0)
      value = Rational(numerator * pow10(exponent));
    else
      value = Rational(numerator, pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

Rational parse_positive_fraction(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ConfigError("expected a positive fraction p/q, got '" + std::string(text) + "'");
  BigInt p = parse_integer(num);
  BigInt q = parse_integer(den);
  if (p == 0 || q == 0)
    throw ConfigError("expected positive p and q in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  return value.str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace rellandau
