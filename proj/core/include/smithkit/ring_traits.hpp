#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "smithkit/bigint.hpp"
#include "smithkit/modp.hpp"
#include "smithkit/multipoly.hpp"
#include "smithkit/ratfunc.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

/// Operations the elimination engines need from a ring. Specializations
/// exist for Z (BigInt), F[x] (UniPoly<Rat>, UniPoly<RatFunc>), and, for the
/// gcd/determinant routes only, Z[x_1..x_k] (MultiPoly).
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static constexpr bool euclidean = true;
  static bool is_zero(const BigInt& a) { return a == 0; }
  /// Euclidean size comparison.
  static int compare_size(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
  static std::size_t weight(const BigInt& a) { return bit_length(a); }
  /// Quotient rounded to nearest, so the remainder satisfies |r| <= |b|/2.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt twice = 2 * abs(r);
    if (twice > abs(b)) {
      q += 1;
      r -= b;
    }
    return {q, r};
  }
  static bool divides(const BigInt& d, const BigInt& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  /// Unit u with u*a canonical (nonnegative).
  static BigInt unit_for(const BigInt& a) { return a < 0 ? BigInt(-1) : BigInt(1); }
  static BigInt canonical(const BigInt& a) { return abs(a); }
  static BigInt gcd(const BigInt& a, const BigInt& b) { return int_gcd(a, b); }
  static bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
  static std::size_t bits(const BigInt& a) { return bit_length(a); }
  static std::string str(const BigInt& a) { return a.get_str(); }
};

namespace detail {

inline std::size_t coeff_bits(const Rat& c) {
  return bit_length(c.get_num()) + bit_length(c.get_den());
}
inline std::size_t coeff_bits(const ModP&) { return 1; }
inline std::size_t coeff_bits(const RatFunc& c) {
  std::size_t b = 0;
  for (const auto& x : c.num().coefficients()) b += coeff_bits(x);
  for (const auto& x : c.den().coefficients()) b += coeff_bits(x);
  return b;
}

}  // namespace detail

/// Optional hook: a ring with a cheap unit group (here Q* inside Q[x]) can
/// rescale whole rows and columns to keep coefficients small.
template <class R>
struct LineContent {
  static constexpr bool enabled = false;
};

template <>
struct LineContent<UniPoly<Rat>> {
  static constexpr bool enabled = true;
  /// Accumulates gcd of numerators and lcm of denominators over a line.
  struct Acc {
    BigInt num = 0, den = 1;
    void add(const UniPoly<Rat>& p) {
      for (const auto& c : p.coefficients()) {
        if (c == 0) continue;
        num = int_gcd(num, c.get_num());
        den = int_lcm(den, c.get_den());
      }
    }
    /// Factor that makes the line primitive over Z, or nullopt when it is
    /// already primitive or zero.
    std::optional<Rat> scale() const {
      if (num == 0 || (num == 1 && den == 1)) return std::nullopt;
      Rat r(den, num);
      r.canonicalize();
      return r;
    }
  };
};

template <class F>
struct RingTraits<UniPoly<F>> {
  using P = UniPoly<F>;
  static constexpr bool euclidean = true;
  static bool is_zero(const P& a) { return a.is_zero(); }
  static int compare_size(const P& a, const P& b) {
    return a.degree() < b.degree() ? -1 : (a.degree() > b.degree() ? 1 : 0);
  }
  static std::size_t weight(const P& a) {
    std::size_t w = 0;
    for (const auto& c : a.coefficients()) w += detail::coeff_bits(c);
    return w;
  }
  static std::pair<P, P> divmod(const P& a, const P& b) { return smithkit::divmod(a, b); }
  static bool divides(const P& d, const P& a) { return smithkit::divides(d, a); }
  static P exact_div(const P& a, const P& b) { return smithkit::exact_div(a, b); }
  static P unit_for(const P& a) { return a.is_zero() ? P(F(1)) : P(F(1) / a.leading()); }
  static P canonical(const P& a) { return a.monic(); }
  static P gcd(const P& a, const P& b) { return unipoly_gcd(a, b); }
  static bool is_unit(const P& a) { return a.degree() == 0; }
  static std::size_t bits(const P& a) {
    std::size_t b = 0;
    for (const auto& c : a.coefficients()) b = std::max(b, detail::coeff_bits(c));
    return b;
  }
  static std::string str(const P& a) { return to_string(a, "x"); }
};

template <>
struct RingTraits<MultiPoly> {
  static constexpr bool euclidean = false;
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static bool divides(const MultiPoly& d, const MultiPoly& a) { return smithkit::divides(d, a); }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return smithkit::exact_div(a, b); }
  static MultiPoly canonical(const MultiPoly& a) { return normalize_sign(a); }
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return multipoly_gcd(a, b); }
  static bool is_unit(const MultiPoly& a) {
    return a.is_constant() && !a.is_zero() && abs(a.constant_value()) == 1;
  }
  static std::size_t bits(const MultiPoly& a) {
    std::size_t b = 0;
    for (const auto& [e, c] : a.terms()) b = std::max(b, bit_length(c));
    return b;
  }
  static std::string str(const MultiPoly& a) { return to_string(a); }
};

}  // namespace smithkit
