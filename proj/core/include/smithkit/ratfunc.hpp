#pragma once

#include <string>

#include "smithkit/bigint.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

/// Element of Q(q): a reduced fraction of polynomials in q with a monic
/// denominator. Equality is therefore structural.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}                  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rat(c)) {}                   // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num) : num_(std::move(num)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);

  static RatFunc q() { return RatFunc(QPoly::x()); }
  /// The bracket (j) = (1 - q^j)/(1 - q) for any integer j.
  static RatFunc bracket(long j);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  /// Value at q = at; throws std::domain_error when the denominator vanishes.
  Rat evaluate(const Rat& at) const;

 private:
  void reduce();

  QPoly num_;
  QPoly den_;
};

std::string to_string(const RatFunc& f);

/// Polynomials in n over Q(q).
using QqPoly = UniPoly<RatFunc>;

}  // namespace smithkit
