#include "setconc/rational.hpp"

#include <cctype>
#include <cmath>

#include "setconc/error.hpp"

namespace setconc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// mpz reads a leading 0 as an octal prefix; strip it so digits stay decimal.
BigInt decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw ParseError("cannot parse \"" + std::string(text) + "\" as a rational: " + std::string(why));
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) fail(whole, "expected digits");
  const BigInt value = decimal_integer(text);
  return negative ? BigInt(-value) : value;
}

BigInt pow10(long exponent) {
  BigInt out = 1;
  for (long i = 0; i < exponent; ++i) out *= 10;
  return out;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string_view text = trim(raw);
  if (text.empty()) fail(raw, "empty");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(trim(text.substr(0, slash)), raw);
    const BigInt den = parse_integer(trim(text.substr(slash + 1)), raw);
    if (den == 0) fail(raw, "zero denominator");
    return Rational(num, den);
  }

  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = rest.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) fail(raw, "bad exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = rest.substr(0, dot);
    const std::string_view frac_part = rest.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) fail(raw, "no digits");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      fail(raw, "expected digits");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(rest)) fail(raw, "expected digits");
    digits = std::string(rest);
  }
  BigInt mantissa = decimal_integer(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(BigInt(mantissa * pow10(exponent)));
  return Rational(mantissa, pow10(-exponent));
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite value cannot be represented exactly");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 significant bits become an integer numerator.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational out{BigInt(scaled)};
  BigInt power = 1;
  for (int i = 0; i < std::abs(exponent); ++i) power *= 2;
  return exponent >= 0 ? Rational(out * power) : Rational(out / power);
}

std::string to_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace setconc
