#include "qmm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qmm {

std::string to_fraction_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt{std::string(num)}, d);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto head = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_token(frac)) return std::nullopt;
    bool negative = false;
    if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if (!head.empty() && !is_integer_token(head)) return std::nullopt;
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt whole = head.empty() ? BigInt(0) : BigInt{std::string(head)};
    BigInt num = whole * scale + BigInt{std::string(frac)};
    if (negative) num = -num;
    return Rational(num, scale);
  }
  if (!is_integer_token(text)) return std::nullopt;
  return Rational(BigInt{std::string(text)});
}

Rational pow_rational(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) throw std::domain_error("pow_rational: zero base with negative exponent");
    return Rational(0);
  }
  const bool invert = e < 0;
  const auto mag = static_cast<unsigned long>(invert ? -e : e);
  BigInt num = boost::multiprecision::pow(numerator(x), static_cast<unsigned>(mag));
  BigInt den = boost::multiprecision::pow(denominator(x), static_cast<unsigned>(mag));
  return invert ? Rational(den, num) : Rational(num, den);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace qmm
