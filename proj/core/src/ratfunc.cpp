#include "smithkit/ratfunc.hpp"

#include <stdexcept>

namespace smithkit {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = unipoly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    Rat inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::bracket(long j) {
  // (1 - q^j)/(1 - q): for j >= 0 this is 1 + q + ... + q^{j-1}; for j < 0
  // it equals -(q^{-1} + ... + q^{j}) = -(1 + q + ... + q^{|j|-1}) / q^{|j|}.
  if (j == 0) return RatFunc();
  std::size_t m = static_cast<std::size_t>(j > 0 ? j : -j);
  QPoly ones(std::vector<Rat>(m, Rat(1)));
  if (j > 0) return RatFunc(ones);
  return RatFunc(-ones, QPoly::monomial(Rat(1), m));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_constant() && b.den_.is_constant()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

Rat RatFunc::evaluate(const Rat& at) const {
  Rat d = den_.evaluate(at);
  if (d == 0) throw std::domain_error("RatFunc: pole at evaluation point");
  return num_.evaluate(at) / d;
}

std::string to_string(const RatFunc& f) {
  std::string n = to_string(f.num(), "q");
  if (f.den().is_constant()) return n;
  std::string d = to_string(f.den(), "q");
  if (f.num().degree() > 0) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

}  // namespace smithkit
