#include "cagekit/rational.hpp"

#include <cctype>

#include "cagekit/errors.hpp"

namespace cagekit {

Rational Rational::normalize(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("not a rational number: '" + std::string(text) + "'");
    return normalize(num, mpz_class(std::string(den_text), 10));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    const bool negative = !int_part.empty() && int_part.front() == '-';
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    const mpz_class whole = parse_integer(digits, text);
    mpz_class scale = 1;
    mpz_class frac = 0;
    if (!frac_part.empty()) {
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
      frac = mpz_class(std::string(frac_part), 10);
    }
    mpz_class num = abs(whole) * scale + frac;
    if (negative || whole < 0) num = -num;
    return normalize(num, scale);
  }

  return Rational(mpq_class(parse_integer(text, text)));
}

Rational normalize(long long num, long long den) {
  return Rational::normalize(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

}  // namespace cagekit
