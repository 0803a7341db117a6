#pragma once

#include <cstddef>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/partition.hpp"

namespace smithkit {

/// Adding a k-border strip to `source` gives `result`; the sign of the
/// move in p_k * s_source is (-1)^height.
struct BorderStripMove {
  Partition source;
  Partition result;
  int k = 0;
  int height = 0;  // rows spanned minus one
};

/// All ways to add a border strip of size k, found by sliding one bead
/// k places on the beta-number abacus.
std::vector<BorderStripMove> border_strip_additions(const Partition& lambda, int k);

/// Index of each partition of n in the reverse-lexicographic order used
/// for every matrix in this module.
std::size_t partition_index(const Partition& lambda);

/// Operator d/dp1 p1 on degree-n symmetric functions in the Schur basis:
/// entry (nu, lambda) counts partitions of n+1 covering both.
Matrix<BigInt> psi_matrix(int n);

/// Operator k d/dpk pk in the Schur basis, built as B^T B where B holds
/// the signed coefficients of p_k * s_lambda.
Matrix<BigInt> psi_k_matrix(int n, int k);

/// The multiset { k (m_k(lambda) + 1) : lambda a partition of n }.
std::vector<BigInt> psi_eigenvalue_multiset(int n, int k);

/// Diagonal obtained by repeatedly taking the product of the distinct
/// values still left in the multiset; padded with leading 1s to |M|.
std::vector<BigInt> conjectured_snf_from_multiset(std::vector<BigInt> multiset);

/// The explicit factorial description of the Smith form of psi_matrix(n),
/// ascending. Only meaningful for n >= 5, where its ranges are well formed.
std::vector<BigInt> cai_explicit_form(int n);

struct CaiReport {
  int n = 0;
  std::vector<BigInt> snf;
  std::vector<BigInt> peeling_form;   // from the multiset of m_1 + 1
  std::vector<BigInt> explicit_form;  // empty when n < 5
  bool peeling_match = false;
  bool explicit_checked = false;
  bool explicit_match = false;
};

CaiReport verify_thm_cai(int n);

/// [C(a(i+j), i+j)] for 0 <= i, j < n.
Matrix<BigInt> binomial_matrix(int a, int n);

struct BinomialSnfStats {
  std::vector<BigInt> diagonal;
  std::size_t threes = 0;  // diagonal entries equal to 3
};

BinomialSnfStats binomial_snf_stats(int a, int n);

}  // namespace smithkit
