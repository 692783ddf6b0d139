#include "lozenge/closed_forms.hpp"

#include <string>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

// Numerator and denominator accumulated separately and divided once.
struct Fraction {
  BigInt num = 1;
  BigInt den = 1;

  void mul(long v) { num *= v; }
  void div(long v) { den *= v; }

  // Multiplies by (alpha)_k for integer alpha.
  void rising(long alpha, long k) {
    if (k > 0) {
      for (long t = 0; t < k; ++t) num *= alpha + t;
    } else {
      for (long t = 1; t <= -k; ++t) {
        if (alpha - t == 0) throw PochhammerPole("(" + std::to_string(alpha) + ")_" + std::to_string(k) + " has a zero factor");
        den *= alpha - t;
      }
    }
  }
  // Divides by (alpha)_k.
  void falling_in(long alpha, long k) {
    Fraction f;
    f.rising(alpha, k);
    num *= f.den;
    den *= f.num;
  }

  Rational value() const { return Rational(num, den); }

  BigInt exact(const char* what) const {
    if (den == 0) throw DomainError(std::string(what) + ": zero denominator");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error(std::string(what) + ": expected an integer value");
    return q;
  }
};

void require_range(const char* name, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a > b + 1)
    throw DomainError(std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      "): requires 0 <= a <= b+1 and b, c >= 0");
}

}  // namespace

BigInt hyperfactorial(int n) {
  if (n < 0) throw DomainError("hyperfactorial of a negative number");
  BigInt h = 1, f = 1;
  for (int k = 1; k < n; ++k) {
    f *= k;
    h *= f;
  }
  return h;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& alpha, int k) {
  Rational r(1);
  if (k > 0) {
    for (int t = 0; t < k; ++t) r *= alpha + Rational(t);
  } else {
    for (int t = 1; t <= -k; ++t) {
      Rational f = alpha - Rational(t);
      if (f.sign() == 0) throw PochhammerPole("(" + alpha.to_string() + ")_" + std::to_string(k) + " has a zero factor");
      r /= f;
    }
  }
  return r;
}

BigInt macmahon(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("macmahon: side lengths must be non-negative");
  Fraction f;
  f.num = hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c);
  f.den = hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c);
  return f.exact("macmahon");
}

BigInt proctor_count(int a, int b, int c) {
  require_range("proctor_count", a, b, c);
  if (a == b + 1) a = b;
  Fraction f;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b - a + 1; ++j) {
      f.mul(c + i + j - 1);
      f.div(i + j - 1);
    }
    for (int j = b - a + 2; j <= b - a + i; ++j) {
      f.mul(2 * c + i + j - 1);
      f.div(i + j - 1);
    }
  }
  return f.exact("proctor_count");
}

BigInt proctor_count_alt(int a, int b, int c) {
  require_range("proctor_count_alt", a, b, c);
  if (a == b + 1) a = b;
  Fraction f;
  for (int i = 1; i <= a; ++i) {
    f.rising(c + i, b - a + 1);
    f.rising(2 * c + b - a + 1 + i, i - 1);
    f.falling_in(i, b - a + i);
  }
  return f.exact("proctor_count_alt");
}

Rational ciucu_weighted_count(int a, int b, int c) {
  require_range("ciucu_weighted_count", a, b, c);
  if (a == b + 1) a = b;
  Fraction f;
  f.num = proctor_count(a, b, c);
  f.den = pow2(static_cast<unsigned>(a));
  for (int i = 1; i <= a; ++i) {
    f.mul(2 * c + b - a + i);
    f.div(c + b - a + i);
  }
  return f.value();
}

BigInt s_count(int a, int b, int c) {
  require_range("s_count", a, b, c);
  if (a == b + 1) a = b;
  Fraction f;
  f.rising(c + a + 2, b - a);
  f.rising(2 * c + b + 3, a - 1);
  f.mul((2 * b - a + 2) * c + (b + 1) * (b + 2));
  f.falling_in(a + 2, b - a + 1);
  f.falling_in(b + 3, a - 1);
  for (int i = 1; i <= a; ++i) {
    f.rising(c + i, b - a + 1);
    f.rising(2 * c + b - a + 1 + i, i - 1);
    f.falling_in(i, b - a + 1);
    f.falling_in(b - a + 1 + i, i - 1);
  }
  return f.exact("s_count");
}

namespace {

Rational s_prime_with_divisor_exponent(int a, int b, int c, int extra) {
  if (a == b + 1) a = b;
  Fraction f;
  f.num = s_count(a, b, c);
  f.den = pow2(static_cast<unsigned>(a + extra));
  f.mul(2 * c + b + 2);
  f.div(c + b + 1);
  for (int i = 1; i <= a; ++i) {
    f.mul(2 * c + b + 1 - i);
    f.div(c + b + 1 - i);
  }
  return f.value();
}

}  // namespace

Rational s_prime_count(int a, int b, int c) {
  require_range("s_prime_count", a, b, c);
  return s_prime_with_divisor_exponent(a, b, c, 1);
}

Rational s_prime_count_uncorrected(int a, int b, int c) {
  require_range("s_prime_count_uncorrected", a, b, c);
  return s_prime_with_divisor_exponent(a, b, c, 0);
}

BigInt stdh_count(int a, int b, int c) {
  if (a < 0 || c < 0 || b < 1 || a > b)
    throw DomainError("stdh_count: requires 0 <= a <= b, b >= 1, c >= 0");
  Rational v = Rational(pow2(static_cast<unsigned>(a + 1))) * s_prime_count(a, b, c) * Rational(s_count(a, b - 1, c));
  if (!v.is_integer()) throw std::logic_error("stdh_count: expected an integer value");
  return v.numerator();
}

Rational formula_value(const RegionSpec& spec) {
  validate(spec);
  const int a = spec.a, b = spec.b, c = spec.c;
  switch (spec.family) {
    case Family::Hexagon: return Rational(macmahon(a, b, c));
    case Family::P: return Rational(proctor_count(a, b, c));
    case Family::PPrime: return ciucu_weighted_count(a, b, c);
    case Family::S: return Rational(s_count(a, b, c));
    case Family::SPrime: return s_prime_count(a, b, c);
    case Family::STDH: return Rational(stdh_count(a, b, c));
    case Family::Custom: break;
  }
  throw DomainError("no closed form for custom regions");
}

}  // namespace lozenge
