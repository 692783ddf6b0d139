#include "lozenge/rational.hpp"

#include <cctype>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw FormatError("not a rational literal: '" + std::string(text) + "'");
  BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw DomainError("value " + to_string() + " is not an integer");
  return value_.get_num();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt pow2(unsigned k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace lozenge
