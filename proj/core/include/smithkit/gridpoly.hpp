#pragma once

#include <string>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/multipoly.hpp"
#include "smithkit/partition.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

class OutOfShape : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// lambda together with lambda*, which adds a border strip running from
/// the end of the first row to the end of the first column. Square (i, j)
/// of lambda carries the variable "x_i_j".
class ExtendedPartition {
 public:
  explicit ExtendedPartition(Partition lambda);

  const Partition& base() const { return lambda_; }
  const Partition& extended() const { return star_; }
  bool in_base(int r, int s) const { return lambda_.contains(r, s); }
  bool in_extended(int r, int s) const { return r >= 1 && star_.contains(r, s); }

  /// lambda(r, s): squares (u, v) of lambda with u >= r and v >= s, as a
  /// partition anchored at (r, s).
  Partition sub_shape(int r, int s) const;
  /// Rank of lambda(i, j).
  int rank_at(int i, int j) const { return sub_shape(i, j).rank(); }

  static std::string var(int i, int j);

 private:
  Partition lambda_;
  Partition star_;
};

/// Sum over partitions mu inside lambda(r, s) of the product of x_ij over
/// lambda(r, s) minus mu. Equals 1 on lambda* minus lambda.
MultiPoly p_rs(const ExtendedPartition& e, int r, int s);

/// Product of x_ij over lambda(r, s); the leading term of p_rs.
MultiPoly a_rs(const ExtendedPartition& e, int r, int s);

/// The (rank + 1)-square of p_rs values with top-left corner (i, j).
Matrix<MultiPoly> build_M(const ExtendedPartition& e, int i, int j);

struct GridReport {
  Matrix<MultiPoly> m;
  MultiPoly det;
  MultiPoly diagonal_product;          // A_11 A_22 ... A_{rho+1,rho+1}
  std::vector<MultiPoly> expected;     // ascending: A_{rho+1,rho+1}, ..., A_11
  std::vector<MultiPoly> minor_gcds;   // d_1, ..., d_m; empty when skipped
  bool det_match = false;
  bool chain = false;                  // expected is a divisibility chain
  bool minors_checked = false;
  bool minors_match = false;           // d_k = product of the first k expected entries
};

/// Determinant check for |lambda| <= 9; minor-gcd check when |lambda| <= 6
/// (or when `force_minors`).
GridReport verify_thm_bessen(const Partition& lambda, bool force_minors = false);

enum class GridBinding { Ones, Q };

struct GridSpecialization {
  GridBinding binding = GridBinding::Ones;
  BigInt det_ones;                // binding Ones
  QPoly det_q;                    // binding Q
  std::vector<QPoly> snf_q;       // binding Q, Smith form over Q[q]
  std::vector<BigInt> snf_ones;   // binding Ones, Smith form over Z
};

GridSpecialization specialize_grid(const Partition& lambda, GridBinding binding);

/// Sets every x_ij to 1 or to q.
MultiPoly bind_grid_vars(const MultiPoly& p, GridBinding binding);

}  // namespace smithkit
