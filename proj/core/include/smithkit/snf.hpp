#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smithkit/matrix.hpp"
#include "smithkit/ring_traits.hpp"

namespace smithkit {

struct SnfOptions {
  /// Also return unimodular P, Q with P*A*Q = diag.
  bool transforms = false;
  /// Abort when an intermediate entry exceeds this many bits.
  std::size_t max_bits = 1'000'000;
};

/// Invariant factors d_1 | d_2 | ... (length min(m, n), zeros last), in the
/// ring's canonical form: nonnegative over Z, monic over F[x].
template <class R>
struct SnfResult {
  std::vector<R> diagonal;
  std::optional<Matrix<R>> left;   // P, m x m
  std::optional<Matrix<R>> right;  // Q, n x n
  std::size_t rank = 0;
};

/// True when every entry divides the next (0 divides only 0).
template <class R>
bool is_divisibility_chain(const std::vector<R>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!RingTraits<R>::divides(d[i], d[i + 1])) return false;
  return true;
}

namespace detail {

template <class R>
class SnfEngine {
  using T = RingTraits<R>;

 public:
  SnfEngine(Matrix<R> a, const SnfOptions& opt) : a_(std::move(a)), opt_(opt) {
    if (opt_.transforms) {
      p_ = Matrix<R>::identity(a_.rows());
      q_ = Matrix<R>::identity(a_.cols());
    }
  }

  SnfResult<R> run() {
    const std::size_t m = a_.rows(), n = a_.cols(), r = std::min(m, n);
    std::size_t t = 0;
    for (; t < r; ++t) {
      if (!move_min_to(t, t, m, t, n)) break;
      reduce_pivot(t);
      R u = T::unit_for(a_(t, t));
      if (!(u == R(1))) {
        a_(t, t) = a_(t, t) * u;
        if (p_) scale_row(*p_, t, u);
      }
    }
    SnfResult<R> res;
    res.rank = t;
    res.diagonal.reserve(r);
    for (std::size_t i = 0; i < r; ++i) res.diagonal.push_back(i < t ? a_(i, i) : R());
    if (opt_.transforms) {
      res.left = std::move(p_);
      res.right = std::move(q_);
    }
    return res;
  }

 private:
  // Moves the nonzero entry of least (size, weight) in rows [r0, r1) x cols
  // [c0, c1) to (t, t). Returns false when the block is zero.
  bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    std::size_t bi = r1, bj = c1, bw = 0;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        const R& x = a_(i, j);
        if (T::is_zero(x)) continue;
        if (bi == r1) {
          bi = i, bj = j, bw = T::weight(x);
          continue;
        }
        int c = T::compare_size(x, a_(bi, bj));
        if (c < 0 || (c == 0 && T::weight(x) < bw)) bi = i, bj = j, bw = T::weight(x);
      }
    if (bi == r1) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (T::is_zero(a_(i, t))) continue;
        auto [qt, rm] = T::divmod(a_(i, t), a_(t, t));
        if (!T::is_zero(qt)) add_row_multiple(i, t, -qt);
        if (!T::is_zero(rm)) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (T::is_zero(a_(t, j))) continue;
        auto [qt, rm] = T::divmod(a_(t, j), a_(t, t));
        if (!T::is_zero(qt)) add_col_multiple(j, t, -qt);
        if (!T::is_zero(rm)) clean = false;
      }
      if (!clean) {
        move_min_in_cross(t);
        continue;
      }
      // Row t and column t are now clear; enforce divisibility of the rest.
      bool folded = false;
      for (std::size_t i = t + 1; i < m && !folded; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!T::divides(a_(t, t), a_(i, j))) {
            add_row_multiple(t, i, R(1));
            folded = true;
            break;
          }
        }
      if (!folded) return;
    }
  }

  // After a dirty pass the smallest entry lives in row t or column t.
  void move_min_in_cross(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t bi = t, bj = t;
    std::size_t bw = T::weight(a_(t, t));
    auto consider = [&](std::size_t i, std::size_t j) {
      const R& x = a_(i, j);
      if (T::is_zero(x)) return;
      int c = T::compare_size(x, a_(bi, bj));
      if (c < 0 || (c == 0 && T::weight(x) < bw)) bi = i, bj = j, bw = T::weight(x);
    };
    for (std::size_t i = t + 1; i < m; ++i) consider(i, t);
    for (std::size_t j = t + 1; j < n; ++j) consider(t, j);
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_rows(a, b);
    if (p_) p_->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_cols(a, b);
    if (q_) q_->swap_cols(a, b);
  }

  // row_dst += c * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const R& c) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (T::is_zero(a_(src, j))) continue;
      a_(dst, j) += c * a_(src, j);
      check_size(a_(dst, j));
    }
    if (p_)
      for (std::size_t j = 0; j < p_->cols(); ++j)
        if (!T::is_zero((*p_)(src, j))) (*p_)(dst, j) += c * (*p_)(src, j);
    if constexpr (LineContent<R>::enabled) {
      typename LineContent<R>::Acc acc;
      for (std::size_t j = 0; j < a_.cols(); ++j) acc.add(a_(dst, j));
      if (auto s = acc.scale()) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) = a_(dst, j).scaled(*s);
        if (p_)
          for (std::size_t j = 0; j < p_->cols(); ++j) (*p_)(dst, j) = (*p_)(dst, j).scaled(*s);
      }
    }
  }
  // col_dst += c * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const R& c) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (T::is_zero(a_(i, src))) continue;
      a_(i, dst) += c * a_(i, src);
      check_size(a_(i, dst));
    }
    if (q_)
      for (std::size_t i = 0; i < q_->rows(); ++i)
        if (!T::is_zero((*q_)(i, src))) (*q_)(i, dst) += c * (*q_)(i, src);
    if constexpr (LineContent<R>::enabled) {
      typename LineContent<R>::Acc acc;
      for (std::size_t i = 0; i < a_.rows(); ++i) acc.add(a_(i, dst));
      if (auto s = acc.scale()) {
        for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) = a_(i, dst).scaled(*s);
        if (q_)
          for (std::size_t i = 0; i < q_->rows(); ++i) (*q_)(i, dst) = (*q_)(i, dst).scaled(*s);
      }
    }
  }
  static void scale_row(Matrix<R>& m, std::size_t i, const R& u) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * u;
  }

  void check_size(const R& x) const {
    if (T::bits(x) > opt_.max_bits)
      throw BudgetExceeded("snf: intermediate entry exceeded " + std::to_string(opt_.max_bits) + " bits");
  }

  Matrix<R> a_;
  SnfOptions opt_;
  std::optional<Matrix<R>> p_, q_;
};

}  // namespace detail

/// Smith normal form over a Euclidean domain (Z or F[x]) by pivoting on the
/// entry of least Euclidean size. With transforms requested, P*A*Q is checked
/// against the diagonal before returning.
template <class R>
SnfResult<R> snf(const Matrix<R>& a, const SnfOptions& opt = {}) {
  static_assert(RingTraits<R>::euclidean, "snf requires a Euclidean domain");
  SnfResult<R> res = detail::SnfEngine<R>(a, opt).run();
  if (opt.transforms) {
    Matrix<R> d = Matrix<R>::diagonal(a.rows(), a.cols(), res.diagonal);
    if (!((*res.left) * a * (*res.right) == d)) throw std::logic_error("snf: transform verification failed");
  }
  return res;
}

/// Smith form of a diagonal matrix given as a list of entries (in any
/// order). Useful for comparing diagonal forms with invariant factors.
template <class R>
std::vector<R> snf_of_diagonal(const std::vector<R>& entries) {
  Matrix<R> d = Matrix<R>::diagonal(entries.size(), entries.size(), entries);
  return snf(d).diagonal;
}

}  // namespace smithkit
