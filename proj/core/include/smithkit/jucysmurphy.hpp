#pragma once

#include <set>
#include <utility>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/partition.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

using Cell = std::pair<int, int>;  // (row, column), 1-based

/// Standard Young tableau stored as rows of entries.
struct SYT {
  Partition shape;
  std::vector<std::vector<int>> rows;

  Cell position(int v) const;
  /// rowv[v - 1] = row containing v.
  std::vector<int> row_word() const;
  friend bool operator==(const SYT&, const SYT&) = default;
};

std::string to_string(const SYT& t);

/// All standard tableaux of shape lambda (|lambda| <= 9), ordered
/// lexicographically by row word.
std::vector<SYT> syt_enumerate(const Partition& lambda);

/// Cell holding k in each standard tableau, in enumeration order.
std::vector<Cell> positions_of_k(const Partition& lambda, int k);

/// S_1 ⊇ S_2 ⊇ ... ⊇ S_{f}: S_r holds the cells k occupies in at least r tableaux.
std::vector<std::set<Cell>> s_r_sets(const Partition& lambda, int k);

/// |prod over S_r of (j - i)| placed at position f - r + 1, listed ascending
/// by index (so the first entry comes from S_f).
std::vector<BigInt> conjectured_snf(const Partition& lambda, int k);

/// Young's natural representation on standard polytabloids; integral.
class NaturalRep {
 public:
  explicit NaturalRep(const Partition& lambda);

  const Partition& shape() const { return shape_; }
  const std::vector<SYT>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Matrix of s_i = (i, i+1), 1 <= i < n.
  const Matrix<BigInt>& adjacent(int i) const { return s_.at(i - 1); }
  /// Matrix of the transposition (i, k), i < k.
  Matrix<BigInt> transposition(int i, int k) const;
  /// Matrix of a permutation given in one-line notation w(1), ..., w(n).
  Matrix<BigInt> of(const std::vector<int>& w) const;

 private:
  Partition shape_;
  std::vector<SYT> basis_;
  std::vector<Matrix<BigInt>> s_;
};

/// W_{lambda,k} = sum over i < k of rep((i, k)).
Matrix<BigInt> jm_matrix(const NaturalRep& rep, int k);
Matrix<BigInt> jm_matrix(const Partition& lambda, int k);

struct JmReport {
  std::vector<BigInt> snf;
  std::vector<BigInt> conjectured;
  bool match = false;
  bool conjectured_chain = false;
  bool char_poly_match = false;  // char poly = prod (t - content of k's cell)
};

JmReport check_conjecture(const Partition& lambda, int k);

}  // namespace smithkit
