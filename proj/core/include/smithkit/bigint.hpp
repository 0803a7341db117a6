#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smithkit {

/// Arbitrary-precision integer. GMP keeps the value canonical (no leading
/// zero limbs, zero carries a positive sign).
using BigInt = mpz_class;

/// Rational number, always stored reduced with a positive denominator.
using Rat = mpq_class;

/// Thrown when an intermediate computation exceeds a configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when text input cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the size range an exhaustive routine supports.
class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonnegative generator of the ideal (a, b); gcd(0, 0) = 0.
inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline std::size_t bit_length(const BigInt& a) {
  return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) { return a.get_str(); }

/// Parses an optionally signed decimal integer.
BigInt parse_bigint(std::string_view text);

/// Parses `p`, `p/q`, or a JSON-style quoted form of either.
Rat parse_rat(std::string_view text);

}  // namespace smithkit
