#pragma once

#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/partition.hpp"
#include "smithkit/ratfunc.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

class TTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The k-th diagonal hook: cells (k, j >= k) and (i >= k, k) of lambda.
struct DiagonalHook {
  int index = 0;
  std::vector<std::pair<int, int>> cells;
  std::vector<int> contents;
};

/// Hooks D_1, ..., D_rank; together they partition the diagram.
std::vector<DiagonalHook> diagonal_hooks(const Partition& lambda);

/// C(n + c, e) = (n + c)(n + c - 1)...(n + c - e + 1) / e! as a polynomial in n.
QPoly poly_binomial(long c, int e);

/// t x t matrix [C(n + lambda_i + j - i - 1, lambda_i + j - i)] over Q[n],
/// the principal specialization of the Jacobi-Trudi matrix.
Matrix<QPoly> jt_specialized(const Partition& lambda, int t);

/// Contents of D_{t-i+1} for i = 1..t; empty lists for empty hooks.
std::vector<std::vector<int>> hook_content_lists(const Partition& lambda, int t);

/// alpha_i = prod over u in D_{t-i+1} of (n + c(u)), monic in n.
std::vector<QPoly> hook_content_alphas(const Partition& lambda, int t);

/// prod over all cells of (n + c(u)).
QPoly content_product(const Partition& lambda);

struct JtReport {
  std::vector<QPoly> snf;
  std::vector<QPoly> alphas;
  bool snf_match = false;
  bool chain = false;       // alpha_1 | alpha_2 | ... | alpha_t
  bool squarefree = false;  // every alpha_i has distinct roots
  QPoly det;
  /// det * h equals the content product; h is reported, not asserted.
  Rat hook_factor;
  bool det_match = false;  // det is a nonzero rational multiple of the content product
};

JtReport verify_thm_jt(const Partition& lambda, int t);

/// f(k) = n (n + (1)) ... (n + (k-1)) / ((1)(2)...(k)) with (j) = (1 - q^j)/(1 - q);
/// f(0) = 1 and f(k) = 0 for k < 0.
QqPoly q_entry(int k);

/// [f(lambda_i - i + j)] over Q(q)[n].
Matrix<QqPoly> jt_q_specialized(const Partition& lambda, int t);

/// gamma_i = prod over u in D_{t-i+1} of (n + (c(u))).
std::vector<QqPoly> hook_content_gammas(const Partition& lambda, int t);

struct JtqReport {
  std::vector<QqPoly> snf;
  std::vector<QqPoly> gammas;
  bool snf_match = false;
};

JtqReport verify_thm_jtq(const Partition& lambda, int t);

/// Substitutes q = 1 coefficientwise.
QPoly at_q_equals_one(const QqPoly& p);

/// "(n-3)(n-2)...(n+6)" style rendering of a product of (n + c); "1" when empty.
std::string format_linear_factors(const std::vector<int>& contents, bool q_brackets = false);

}  // namespace smithkit
