#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "smithkit/matrix.hpp"
#include "smithkit/ring_traits.hpp"

namespace smithkit {

class NonSquare : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when successive minor gcds do not yield a divisibility chain, so
/// no Smith form consistent with the minors exists.
class NonDivisible : public std::runtime_error {
 public:
  NonDivisible(std::size_t step, const std::string& what) : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division.
template <class R>
R det_bareiss(Matrix<R> a) {
  using T = RingTraits<R>;
  if (!a.is_square()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && T::is_zero(a(p, k))) ++p;
      if (p == n) return R();
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = T::exact_div(v, prev);
      }
      a(i, k) = R();
    }
    prev = a(k, k);
  }
  R d = a(n - 1, n - 1);
  return negate ? R() - d : d;
}

/// Laplace expansion along rows, memoized on the set of used columns.
/// Suited to small matrices over rings without cheap exact division.
template <class R>
R det_cofactor(const Matrix<R>& a, std::size_t max_dim = 10) {
  if (!a.is_square()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > max_dim) throw std::invalid_argument("det_cofactor: dimension " + std::to_string(n) + " exceeds limit");
  if (n == 0) return R(1);
  // memo[mask] = determinant of rows [n - popcount(mask), n) on columns mask.
  std::unordered_map<std::uint32_t, R> memo;
  auto rec = [&](auto&& self, std::uint32_t mask, std::size_t row) -> R {
    if (row == n) return R(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    R sum{};
    std::size_t sign_pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1U << j))) continue;
      const R& entry = a(row, j);
      if (!(entry == R())) {
        R minor = self(self, mask & ~(1U << j), row + 1);
        if (sign_pos % 2 == 0) {
          sum += entry * minor;
        } else {
          sum -= entry * minor;
        }
      }
      ++sign_pos;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, (n == 32 ? 0xFFFFFFFFU : ((1U << n) - 1U)), 0);
}

/// Exact determinant: fraction-free elimination for Z and F[x], cofactor
/// expansion (dimension <= 10) for multivariate polynomials.
template <class R>
R det_exact(const Matrix<R>& a) {
  if constexpr (std::is_same_v<R, MultiPoly>) {
    return det_cofactor(a);
  } else {
    return det_bareiss(a);
  }
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Gcd of all k x k minors, canonical; 0 when every minor vanishes.
template <class R>
R gcd_of_minors(const Matrix<R>& a, std::size_t k) {
  using T = RingTraits<R>;
  if (k < 1 || k > std::min(a.rows(), a.cols()))
    throw KOutOfRange("gcd_of_minors: k=" + std::to_string(k) + " outside [1, min(m,n)]");
  std::vector<std::size_t> rows(k), cols(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  R g{};
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      R d = det_exact(a.select(rows, cols));
      if (T::is_zero(d)) continue;
      g = T::gcd(g, d);
      if (T::is_unit(g)) return T::canonical(g);
    } while (detail::next_combination(cols, a.cols()));
  } while (detail::next_combination(rows, a.rows()));
  return T::canonical(g);
}

template <class R>
struct MinorSnf {
  /// alpha_k = d_k / d_{k-1}; zeros from `vanish_from` onward.
  std::vector<R> diagonal;
  /// Minor gcds d_1, ..., d_min(m,n).
  std::vector<R> minor_gcds;
  /// First index (0-based) whose minors all vanish; diagonal.size() if none.
  std::size_t vanish_from = 0;
};

/// Invariant factors from successive minor gcds. Over a ring that is not a
/// principal ideal domain the result is only a candidate; the specialization
/// test can refute it. Throws NonDivisible when d_k / d_{k-1} is inexact or
/// the quotients fail to form a divisibility chain.
template <class R>
MinorSnf<R> snf_via_minors(const Matrix<R>& a) {
  using T = RingTraits<R>;
  const std::size_t r = std::min(a.rows(), a.cols());
  MinorSnf<R> out;
  out.vanish_from = r;
  R prev(1);
  for (std::size_t k = 1; k <= r; ++k) {
    R dk = gcd_of_minors(a, k);
    out.minor_gcds.push_back(dk);
    if (T::is_zero(dk)) {
      if (out.vanish_from == r) out.vanish_from = k - 1;
      out.diagonal.push_back(R());
      continue;
    }
    if (!T::divides(prev, dk))
      throw NonDivisible(k, "minor gcd d_" + std::to_string(k) + " is not divisible by d_" + std::to_string(k - 1));
    R alpha = T::canonical(T::exact_div(dk, prev));
    if (!out.diagonal.empty() && !T::divides(out.diagonal.back(), alpha))
      throw NonDivisible(k, "alpha_" + std::to_string(k) + " is not a multiple of alpha_" + std::to_string(k - 1));
    out.diagonal.push_back(alpha);
    prev = dk;
  }
  return out;
}

}  // namespace smithkit
