#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smithkit/bigint.hpp"

namespace smithkit {

/// Integer partition with weakly decreasing positive parts. Cells are
/// addressed 1-based as (row, column), matching the usual diagram notation.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts and drops zeros; throws on negative parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row length (1-based); 0 past the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains(int i, int j) const { return j >= 1 && j <= row(i); }
  /// Number of parts equal to k.
  int multiplicity(int k) const;
  /// Durfee square side: max { i : lambda_i >= i }.
  int rank() const;
  Partition conjugate() const;
  int hook_length(int i, int j) const;
  static int content(int i, int j) { return j - i; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "(7,5,5,2)"; the empty partition prints as "()".
std::string to_string(const Partition& p);
/// Accepts "7,5,5,2", "(7,5,5,2)" or "" for the empty partition.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
/// Number of partitions via Euler's pentagonal recurrence.
BigInt partition_count(int n);

/// Number of standard Young tableaux (hook length formula).
BigInt f_lambda(const Partition& p);

}  // namespace smithkit
