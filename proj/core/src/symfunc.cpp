#include "smithkit/symfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "smithkit/snf.hpp"

namespace smithkit {

std::vector<BorderStripMove> border_strip_additions(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("border strip size must be positive");
  const int len = lambda.length() + k;
  std::vector<int> beta(len);
  for (int i = 1; i <= len; ++i) beta[i - 1] = lambda.row(i) + len - i;
  std::vector<BorderStripMove> out;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] + k;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > beta[i] && b < target) ++height;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(len);
    for (int j = 1; j <= len; ++j) parts[j - 1] = moved[j - 1] - (len - j);
    out.push_back({lambda, Partition(std::move(parts)), k, height});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.result > b.result; });
  return out;
}

std::size_t partition_index(const Partition& lambda) {
  auto all = partitions_of(lambda.size());
  auto it = std::find(all.begin(), all.end(), lambda);
  return static_cast<std::size_t>(it - all.begin());
}

namespace {

std::map<Partition, std::size_t> index_map(const std::vector<Partition>& ps) {
  std::map<Partition, std::size_t> m;
  for (std::size_t i = 0; i < ps.size(); ++i) m[ps[i]] = i;
  return m;
}

// Partitions obtained by adding one cell.
std::vector<Partition> covers(const Partition& p) {
  std::vector<Partition> out;
  for (int i = 1; i <= p.length() + 1; ++i)
    if (i == 1 || p.row(i) < p.row(i - 1)) {
      std::vector<int> parts = p.parts();
      if (i > p.length())
        parts.push_back(1);
      else
        ++parts[i - 1];
      out.emplace_back(std::move(parts));
    }
  return out;
}

}  // namespace

Matrix<BigInt> psi_matrix(int n) {
  if (n < 1) throw std::invalid_argument("psi_matrix needs n >= 1");
  const auto ps = partitions_of(n);
  std::vector<std::vector<Partition>> up(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) up[i] = covers(ps[i]);
  Matrix<BigInt> m(ps.size(), ps.size(), BigInt(0));
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = 0; b < ps.size(); ++b) {
      long c = 0;
      for (const auto& mu : up[a])
        if (std::find(up[b].begin(), up[b].end(), mu) != up[b].end()) ++c;
      m(a, b) = c;
    }
  return m;
}

Matrix<BigInt> psi_k_matrix(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("psi_k_matrix needs n, k >= 1");
  const auto src = partitions_of(n);
  const auto dst = partitions_of(n + k);
  const auto idx = index_map(dst);
  Matrix<BigInt> b(dst.size(), src.size(), BigInt(0));
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& mv : border_strip_additions(src[j], k)) b(idx.at(mv.result), j) += mv.height % 2 ? -1 : 1;
  return b.transpose() * b;
}

std::vector<BigInt> psi_eigenvalue_multiset(int n, int k) {
  std::vector<BigInt> out;
  for (const auto& p : partitions_of(n)) out.emplace_back(k * (p.multiplicity(k) + 1));
  return out;
}

std::vector<BigInt> conjectured_snf_from_multiset(std::vector<BigInt> multiset) {
  const std::size_t total = multiset.size();
  std::sort(multiset.begin(), multiset.end());
  std::vector<BigInt> peeled;
  while (!multiset.empty()) {
    BigInt prod = 1;
    std::vector<BigInt> rest;
    for (std::size_t i = 0; i < multiset.size(); ++i) {
      if (i > 0 && multiset[i] == multiset[i - 1])
        rest.push_back(multiset[i]);
      else
        prod *= multiset[i];
    }
    peeled.push_back(prod);
    multiset = std::move(rest);
  }
  std::vector<BigInt> out(total - peeled.size(), BigInt(1));
  out.insert(out.end(), peeled.rbegin(), peeled.rend());
  return out;
}

std::vector<BigInt> cai_explicit_form(int n) {
  if (n < 5) return {};
  auto p = [](int m) { return partition_count(m); };
  std::vector<BigInt> out;
  BigInt ones = p(n) - p(n - 1) + p(n - 2);
  for (BigInt i = 0; i < ones; ++i) out.emplace_back(1);
  for (int k = n - 2; k >= 3; --k) {
    BigInt mult = p(k + 1) - 2 * p(k) + p(k - 1);
    for (BigInt i = 0; i < mult; ++i) out.push_back(factorial(static_cast<unsigned long>(n - k)));
  }
  out.push_back((n + 1) * factorial(static_cast<unsigned long>(n - 1)));
  return out;
}

CaiReport verify_thm_cai(int n) {
  CaiReport r;
  r.n = n;
  r.snf = snf(psi_matrix(n)).diagonal;
  r.peeling_form = conjectured_snf_from_multiset(psi_eigenvalue_multiset(n, 1));
  r.peeling_match = r.snf == r.peeling_form;
  r.explicit_form = cai_explicit_form(n);
  r.explicit_checked = !r.explicit_form.empty();
  r.explicit_match = r.explicit_checked && r.snf == r.explicit_form;
  return r;
}

Matrix<BigInt> binomial_matrix(int a, int n) {
  if (a < 2 || n < 1) throw std::invalid_argument("binomial_matrix needs a >= 2 and n >= 1");
  Matrix<BigInt> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = binomial(static_cast<unsigned long>(a * (i + j)), static_cast<unsigned long>(i + j));
  return m;
}

BinomialSnfStats binomial_snf_stats(int a, int n) {
  BinomialSnfStats s;
  s.diagonal = snf(binomial_matrix(a, n)).diagonal;
  s.threes = static_cast<std::size_t>(std::count(s.diagonal.begin(), s.diagonal.end(), BigInt(3)));
  return s;
}

}  // namespace smithkit
