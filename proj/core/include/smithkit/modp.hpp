#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "smithkit/bigint.hpp"

namespace smithkit {

/// Element of Z/p for a word-sized prime p < 2^62. The modulus is per
/// thread and set with ModP::Scope, so a UniPoly<ModP> only makes sense
/// inside the scope that created it.
class ModP {
 public:
  class Scope {
   public:
    explicit Scope(std::uint64_t p) : saved_(modulus_) {
      if (p < 2 || p >= (1ULL << 62)) throw std::invalid_argument("ModP: modulus out of range");
      modulus_ = p;
    }
    ~Scope() { modulus_ = saved_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint64_t saved_;
  };

  static std::uint64_t modulus() { return modulus_; }

  ModP() = default;
  ModP(long v) {  // NOLINT(google-explicit-constructor)
    const auto p = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % p;
    v_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  explicit ModP(const BigInt& v) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), modulus_);
    v_ = r.get_ui();
  }
  /// Image of a rational whose denominator is prime to p.
  explicit ModP(const Rat& v) : ModP(ModP(v.get_num()) / ModP(v.get_den())) {}

  std::uint64_t value() const { return v_; }
  /// Representative in (-p/2, p/2].
  BigInt symmetric_lift() const {
    BigInt r(static_cast<unsigned long>(v_));
    if (v_ > modulus_ / 2) r -= static_cast<unsigned long>(modulus_);
    return r;
  }

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= modulus_) s -= modulus_;
    return raw(s);
  }
  friend ModP operator-(ModP a, ModP b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus_ - b.v_); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % modulus_));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP pow(std::uint64_t e) const {
    ModP r = raw(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    return pow(modulus_ - 2);
  }

 private:
  static ModP raw(std::uint64_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }

  std::uint64_t v_ = 0;
  static inline thread_local std::uint64_t modulus_ = 2305843009213693951ULL;  // 2^61 - 1
};

inline std::string to_string(ModP a) { return std::to_string(a.value()); }

/// Primes just above 2^61, deterministic and increasing.
std::vector<std::uint64_t> word_primes(std::size_t count);

}  // namespace smithkit
