#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smithkit/bigint.hpp"

namespace smithkit {

/// Dense univariate polynomial over a field F, lowest degree first.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
template <class F>
class UniPoly {
 public:
  using Coeff = F;

  UniPoly() = default;
  UniPoly(F c) {  // NOLINT(google-explicit-constructor)
    if (!(c == F(0))) c_.push_back(std::move(c));
  }
  template <std::integral I>
  UniPoly(I c) : UniPoly(F(static_cast<long>(c))) {}  // NOLINT
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(F c, std::size_t degree) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coefficients() const { return c_; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    const F inv = F(1) / c_.back();
    for (auto& x : r.c_) x = x * inv;
    return r;
  }

  F evaluate(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Multiplies every coefficient by a scalar.
  UniPoly scaled(const F& s) const {
    if (s == F(0)) return {};
    UniPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  /// Applies `fn` to each coefficient, producing a polynomial over another field.
  template <class G, class Fn>
  UniPoly<G> map(Fn&& fn) const {
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(fn(x));
    return UniPoly<G>(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Division with remainder: a = q*b + r with deg r < deg b.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<F>{}, a};
  std::vector<F> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const F inv_lead = F(1) / bc.back();
  std::vector<F> quot(rem.size() - db, F(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == F(0)) continue;
    F factor = rem[k] * inv_lead;
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = rem[shift + j] - factor * bc[j];
    quot[shift] = std::move(factor);
  }
  rem.resize(db);
  return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

template <class F>
bool divides(const UniPoly<F>& d, const UniPoly<F>& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

/// Quotient of an exact division; throws if the remainder is nonzero.
template <class F>
UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UniPoly<F> unipoly_gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    UniPoly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UniPoly<F> pow(const UniPoly<F>& base, unsigned e) {
  UniPoly<F> result(F(1));
  UniPoly<F> b = base;
  while (e) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return result;
}

/// Renders `c0 + c1*x + ...` in descending powers, e.g. `n^2 - 1`.
template <class F>
std::string to_string(const UniPoly<F>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == F(0)) continue;
    std::string coef = to_string(c[k]);
    bool negative = !coef.empty() && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos;
    if (negative) coef.erase(0, 1);
    bool compound = coef.find_first_of("+-", 0) != std::string::npos;
    if (compound) coef = "(" + coef + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

using QPoly = UniPoly<Rat>;

}  // namespace smithkit
