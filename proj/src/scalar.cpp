#include "cdalg/scalar.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace cdalg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw std::invalid_argument("invalid scalar literal '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Decimal digit string as an integer; GMP would read a leading 0 as octal.
boost::multiprecision::mpz_int decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return boost::multiprecision::mpz_int(std::string(digits));
}

// Decimal literal [sign]digits[.digits][(e|E)[sign]digits] as an exact rational.
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) bad_scalar(text);
    s = s.substr(0, e);
  }
  std::string digits;
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) bad_scalar(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_scalar(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_scalar(text);
  digits.append(int_part).append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  const boost::multiprecision::mpz_int mantissa = decimal_integer(digits);
  boost::multiprecision::mpz_int ten_power = boost::multiprecision::pow(
      boost::multiprecision::mpz_int(10), static_cast<unsigned>(std::abs(exponent)));
  Rational value = exponent >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
  return negative ? Rational(-value) : value;
}

}  // namespace

template <>
Rational parse_scalar<Rational>(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.empty()) bad_scalar(raw);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = trim(text.substr(slash + 1));
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_scalar(raw);
    const auto p = decimal_integer(num);
    const auto q = decimal_integer(den);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(raw) + "'");
    Rational value(p, q);
    return negative ? Rational(-value) : value;
  }
  return parse_decimal(text);
}

template <>
double parse_scalar<double>(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.empty()) bad_scalar(raw);
  if (text.find('/') != std::string_view::npos) {
    return to_double(parse_scalar<Rational>(text));
  }
  std::string_view s = text;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad_scalar(raw);
  return value;
}

std::string format_scalar(double x) {
  if (x == 0.0) return "0";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  if (ec != std::errc()) throw std::runtime_error("failed to format scalar");
  return std::string(buffer, ptr);
}

std::string format_scalar(const Rational& x) { return x.str(); }

}  // namespace cdalg
