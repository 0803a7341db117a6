#include "smithkit/exactmat.hpp"

#include <algorithm>

namespace smithkit {

BigInt AbelianGroupDesc::torsion_order() const {
  BigInt o = 1;
  for (const auto& f : factors) o *= f;
  return o;
}

std::string to_string(const AbelianGroupDesc& g) {
  std::string out;
  for (const auto& f : g.factors) {
    if (!out.empty()) out += " + ";
    out += "Z/" + f.get_str();
  }
  if (g.free_rank) {
    if (!out.empty()) out += " + ";
    out += "Z";
    if (g.free_rank > 1) out += "^" + std::to_string(g.free_rank);
  }
  return out.empty() ? "0" : out;
}

AbelianGroupDesc cokernel(const Matrix<BigInt>& relations) {
  AbelianGroupDesc g;
  if (relations.rows() == 0) {
    g.free_rank = relations.cols();
    return g;
  }
  auto res = snf(relations);
  for (std::size_t i = 0; i < res.rank; ++i)
    if (res.diagonal[i] > 1) g.factors.push_back(res.diagonal[i]);
  g.free_rank = relations.cols() - res.rank;
  return g;
}

Matrix<BigInt> evaluate(const Matrix<MultiPoly>& a, const std::map<std::string, BigInt>& values) {
  Matrix<BigInt> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const MultiPoly& p = a(i, j);
      std::map<std::string, BigInt> relevant;
      for (const auto& v : p.vars()) {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("evaluate: no value for '" + v + "'");
        relevant.emplace(v, it->second);
      }
      out(i, j) = smithkit::evaluate(p, relevant);
    }
  return out;
}

SpecializationReport refute_snf_by_specialization(const Matrix<MultiPoly>& a, const std::vector<MultiPoly>& candidate,
                                                  const std::string& var, const BigInt& point) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& v : a(i, j).active_vars())
        if (v != var) throw std::invalid_argument("refute_snf_by_specialization: entry involves '" + v + "'");
  const std::map<std::string, BigInt> at{{var, point}};
  Matrix<BigInt> a_at = a.map([&](const MultiPoly& p) { return smithkit::evaluate(p.with_vars({var}), at); });
  Matrix<BigInt> c_at(a.rows(), a.cols());
  for (std::size_t i = 0; i < candidate.size() && i < a.rows() && i < a.cols(); ++i)
    c_at(i, i) = smithkit::evaluate(candidate[i].with_vars({var}), at);
  SpecializationReport rep;
  rep.matrix_snf = snf(a_at).diagonal;
  rep.candidate_snf = snf(c_at).diagonal;
  rep.verdict = rep.matrix_snf == rep.candidate_snf ? SpecializationVerdict::Consistent : SpecializationVerdict::Refuted;
  return rep;
}

QPoly char_poly(const Matrix<BigInt>& a) {
  if (!a.is_square()) throw NonSquare("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<Rat> h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rat(a(i, j));
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      h.swap_rows(piv, m);
      h.swap_cols(piv, m);
    }
    const Rat t = h(m, m - 1);
    for (std::size_t j = m + 1; j < n; ++j) {
      const Rat u = h(j, m - 1) / t;
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(j, c) -= u * h(m, c);
      for (std::size_t r = 0; r < n; ++r) h(r, m) += u * h(r, j);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}, 1-based.
  std::vector<QPoly> p{QPoly(Rat(1))};
  const QPoly x = QPoly::x();
  for (std::size_t k = 1; k <= n; ++k) {
    QPoly next = (x - QPoly(h(k - 1, k - 1))) * p[k - 1];
    Rat prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      next = next - p[i - 1].scaled(h(i - 1, k - 1) * prod);
    }
    p.push_back(next);
  }
  return p[n];
}

}  // namespace smithkit
