#include "smithkit/gridpoly.hpp"

#include <map>

#include "smithkit/minors.hpp"
#include "smithkit/snf.hpp"

namespace smithkit {

namespace {

Partition extend(const Partition& lambda) {
  std::vector<int> parts{lambda.row(1) + 1};
  for (int i = 2; i <= lambda.length() + 1; ++i) parts.push_back(lambda.row(i - 1) + 1);
  return Partition(std::move(parts));
}

void check_cell(const ExtendedPartition& e, int r, int s) {
  if (!e.in_extended(r, s))
    throw OutOfShape("square (" + std::to_string(r) + "," + std::to_string(s) + ") is outside the extended diagram");
}

// Partitions whose diagram fits inside `shape`.
void sub_partitions(const Partition& shape, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(cur.size()) + 1;
  out.push_back(cur);
  const int cap = std::min(shape.row(i), cur.empty() ? shape.row(1) : cur.back());
  for (int v = 1; v <= cap; ++v) {
    cur.push_back(v);
    sub_partitions(shape, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ExtendedPartition::ExtendedPartition(Partition lambda) : lambda_(std::move(lambda)), star_(extend(lambda_)) {}

Partition ExtendedPartition::sub_shape(int r, int s) const {
  std::vector<int> parts;
  for (int u = r; u <= lambda_.length(); ++u)
    if (lambda_.row(u) >= s) parts.push_back(lambda_.row(u) - s + 1);
  return Partition(std::move(parts));
}

std::string ExtendedPartition::var(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }

MultiPoly p_rs(const ExtendedPartition& e, int r, int s) {
  check_cell(e, r, s);
  const Partition shape = e.sub_shape(r, s);
  std::vector<std::vector<int>> mus;
  std::vector<int> cur;
  sub_partitions(shape, cur, mus);
  MultiPoly sum;
  for (const auto& mu : mus) {
    MultiPoly term(1);
    for (int u = 1; u <= shape.length(); ++u) {
      const int skip = u <= static_cast<int>(mu.size()) ? mu[u - 1] : 0;
      for (int v = skip + 1; v <= shape.row(u); ++v)
        term *= MultiPoly::variable(ExtendedPartition::var(r + u - 1, s + v - 1));
    }
    sum += term;
  }
  return sum;
}

MultiPoly a_rs(const ExtendedPartition& e, int r, int s) {
  check_cell(e, r, s);
  const Partition shape = e.sub_shape(r, s);
  MultiPoly prod(1);
  for (int u = 1; u <= shape.length(); ++u)
    for (int v = 1; v <= shape.row(u); ++v) prod *= MultiPoly::variable(ExtendedPartition::var(r + u - 1, s + v - 1));
  return prod;
}

Matrix<MultiPoly> build_M(const ExtendedPartition& e, int i, int j) {
  check_cell(e, i, j);
  const int m = e.rank_at(i, j) + 1;
  Matrix<MultiPoly> out(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out(a, b) = p_rs(e, i + a, j + b);
  return out;
}

GridReport verify_thm_bessen(const Partition& lambda, bool force_minors) {
  if (lambda.size() > 9) throw BudgetExceeded("grid verification is limited to |lambda| <= 9");
  ExtendedPartition e(lambda);
  GridReport r;
  r.m = build_M(e, 1, 1);
  const int m = static_cast<int>(r.m.rows());
  r.det = det_exact(r.m);
  r.diagonal_product = MultiPoly(1);
  for (int k = m; k >= 1; --k) r.expected.push_back(a_rs(e, k, k));
  for (const auto& a : r.expected) r.diagonal_product *= a;
  r.det_match = r.det == r.diagonal_product;
  r.chain = is_divisibility_chain(r.expected);
  if (lambda.size() <= 6 || force_minors) {
    r.minors_checked = true;
    r.minors_match = true;
    MultiPoly prefix(1);
    for (int k = 1; k <= m; ++k) {
      r.minor_gcds.push_back(gcd_of_minors(r.m, k));
      prefix *= r.expected[k - 1];
      if (!(r.minor_gcds.back() == normalize_sign(prefix))) r.minors_match = false;
    }
  }
  return r;
}

MultiPoly bind_grid_vars(const MultiPoly& p, GridBinding binding) {
  std::map<std::string, MultiPoly> values;
  const MultiPoly target = binding == GridBinding::Ones ? MultiPoly(1) : MultiPoly::variable("q");
  for (const auto& v : p.active_vars()) values[v] = target;
  return substitute(p, values);
}

GridSpecialization specialize_grid(const Partition& lambda, GridBinding binding) {
  ExtendedPartition e(lambda);
  Matrix<MultiPoly> m = build_M(e, 1, 1);
  GridSpecialization out;
  out.binding = binding;
  if (binding == GridBinding::Ones) {
    Matrix<BigInt> z(m.rows(), m.cols());
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) z(a, b) = bind_grid_vars(m(a, b), binding).constant_value();
    out.det_ones = det_exact(z);
    out.snf_ones = snf(z).diagonal;
  } else {
    Matrix<QPoly> z(m.rows(), m.cols());
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) z(a, b) = to_qpoly(bind_grid_vars(m(a, b), binding), "q");
    out.det_q = det_exact(z);
    out.snf_q = snf(z).diagonal;
  }
  return out;
}

}  // namespace smithkit
