#include "l2inv/rational.hpp"

#include <cctype>
#include <sstream>

namespace l2inv {

std::string rational_to_string(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::optional<Int> parse_int(const std::string& s) {
  if (!is_integer_token(s)) return std::nullopt;
  return Int(s);
}

Int pow10(unsigned long e) {
  Int r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  std::string mantissa = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    std::string et = text.substr(e + 1);
    if (!is_integer_token(et)) return std::nullopt;
    try {
      exp10 = std::stol(et);
    } catch (...) {
      return std::nullopt;
    }
  }
  Int num;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    std::string head = mantissa.substr(0, dot), tail = mantissa.substr(dot + 1);
    if (tail.empty() || !is_integer_token(tail) || tail[0] == '-' || tail[0] == '+')
      return std::nullopt;
    if (head.empty() || head == "-" || head == "+") head += "0";
    auto h = parse_int(head);
    if (!h) return std::nullopt;
    frac_digits = static_cast<long>(tail.size());
    bool neg = *h < 0;
    num = abs(*h) * pow10(tail.size()) + Int(tail);
    if (neg) num = -num;
  } else {
    auto h = parse_int(mantissa);
    if (!h) return std::nullopt;
    num = *h;
  }
  long net = exp10 - frac_digits;
  if (net >= 0) return Rational(num * pow10(static_cast<unsigned long>(net)), 1);
  return Rational(num, pow10(static_cast<unsigned long>(-net)));
}

std::optional<Int> parse_big_integer(const std::string& text) {
  auto q = parse_rational(text);
  if (!q || denominator(*q) != 1) return std::nullopt;
  return numerator(*q);
}

std::string decimal_truncated(const Rational& q, int digits) {
  Int n = abs(numerator(q)), d = denominator(q);
  std::ostringstream out;
  if (q < 0) out << "-";
  out << (n / d);
  if (digits <= 0) return out.str();
  out << ".";
  Int rem = n % d;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out << (rem / d);
    rem %= d;
  }
  return out.str();
}

std::string decimal_agreeing_digits(const Rational& lo, const Rational& hi, int digits) {
  std::string a = decimal_truncated(lo, digits), b = decimal_truncated(hi, digits);
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return a.substr(0, n);
}

}  // namespace l2inv
