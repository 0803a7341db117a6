#include "smithkit/jucysmurphy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "smithkit/exactmat.hpp"
#include "smithkit/snf.hpp"

namespace smithkit {

Cell SYT::position(int v) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == v) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw std::out_of_range("entry " + std::to_string(v) + " not in tableau");
}

std::vector<int> SYT::row_word() const {
  std::vector<int> w(shape.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i]) w[v - 1] = static_cast<int>(i) + 1;
  return w;
}

std::string to_string(const SYT& t) {
  std::string out;
  for (const auto& row : t.rows) {
    if (!out.empty()) out += "/";
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + std::to_string(row[j]);
  }
  return out;
}

std::vector<SYT> syt_enumerate(const Partition& lambda) {
  if (lambda.size() > 9) throw TooLarge("standard tableaux are enumerated only for |lambda| <= 9");
  std::vector<SYT> out;
  SYT cur{lambda, std::vector<std::vector<int>>(lambda.length())};
  auto rec = [&](auto&& self, int v) -> void {
    if (v > lambda.size()) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      const auto len = static_cast<int>(cur.rows[r].size());
      if (len >= lambda.row(r + 1)) continue;
      if (r > 0 && static_cast<int>(cur.rows[r - 1].size()) <= len) continue;
      cur.rows[r].push_back(v);
      self(self, v + 1);
      cur.rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Cell> positions_of_k(const Partition& lambda, int k) {
  if (k < 1 || k > lambda.size()) throw std::out_of_range("k must lie in 1..|lambda|");
  std::vector<Cell> out;
  for (const auto& t : syt_enumerate(lambda)) out.push_back(t.position(k));
  return out;
}

std::vector<std::set<Cell>> s_r_sets(const Partition& lambda, int k) {
  const auto pos = positions_of_k(lambda, k);
  std::map<Cell, std::size_t> mult;
  for (const auto& c : pos) ++mult[c];
  std::vector<std::set<Cell>> out(pos.size());
  for (std::size_t r = 1; r <= pos.size(); ++r)
    for (const auto& [c, m] : mult)
      if (m >= r) out[r - 1].insert(c);
  return out;
}

std::vector<BigInt> conjectured_snf(const Partition& lambda, int k) {
  const auto sets = s_r_sets(lambda, k);
  const std::size_t f = sets.size();
  std::vector<BigInt> out(f);
  for (std::size_t r = 1; r <= f; ++r) {
    BigInt prod = 1;
    for (auto [i, j] : sets[r - 1]) prod *= j - i;
    out[f - r] = abs(prod);
  }
  return out;
}

namespace {

// Vectors in the permutation module spanned by tabloids, each tabloid
// keyed by its row word.
using Tabloid = std::vector<int>;
using TabloidVec = std::map<Tabloid, long>;

// e_T = sum over column permutations sigma of sgn(sigma) {sigma T}, with T
// given by its rows (not necessarily standard).
TabloidVec polytabloid(const std::vector<std::vector<int>>& rows, int n) {
  Tabloid base(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int v : rows[i]) base[v - 1] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> cols;
  for (std::size_t j = 0; j < (rows.empty() ? 0 : rows[0].size()); ++j) {
    std::vector<int> col;
    for (const auto& row : rows)
      if (j < row.size()) col.push_back(row[j]);
    cols.push_back(col);
  }
  TabloidVec out;
  Tabloid cur = base;
  auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == cols.size()) {
      out[cur] += sign;
      return;
    }
    std::vector<int> perm(cols[c].size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inversions;
      // Entry cols[c][i] moves to the row of position perm[i].
      for (std::size_t i = 0; i < perm.size(); ++i) cur[cols[c][i] - 1] = perm[i] + 1;
      self(self, c + 1, inversions % 2 ? -sign : sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < perm.size(); ++i) cur[cols[c][i] - 1] = static_cast<int>(i) + 1;
  };
  rec(rec, 0, 1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

NaturalRep::NaturalRep(const Partition& lambda) : shape_(lambda), basis_(syt_enumerate(lambda)) {
  if (lambda.size() > 7) throw TooLarge("the natural representation is built only for |lambda| <= 7");
  const int n = lambda.size();
  const std::size_t f = basis_.size();
  std::map<Tabloid, std::size_t> standard;  // tabloid of a standard T -> index
  std::vector<TabloidVec> e(f);
  for (std::size_t t = 0; t < f; ++t) {
    standard[basis_[t].row_word()] = t;
    e[t] = polytabloid(basis_[t].rows, n);
  }
  // Triangular straightening: the least row word in the support of a
  // combination of standard polytabloids is the tabloid of one of them.
  auto straighten = [&](TabloidVec v) {
    std::vector<long> coords(f, 0);
    while (!v.empty()) {
      const auto& [tab, c] = *v.begin();
      auto it = standard.find(tab);
      if (it == standard.end()) throw std::logic_error("straightening left the Specht module");
      const long coef = c;
      coords[it->second] += coef;
      for (const auto& [u, d] : e[it->second]) {
        long& x = v[u];
        x -= coef * d;
        if (x == 0) v.erase(u);
      }
    }
    return coords;
  };
  for (int i = 1; i < n; ++i) {
    Matrix<BigInt> m(f, f, BigInt(0));
    for (std::size_t t = 0; t < f; ++t) {
      // s_i e_T = e_{s_i T}.
      auto rows = basis_[t].rows;
      for (auto& row : rows)
        for (int& v : row) v = v == i ? i + 1 : (v == i + 1 ? i : v);
      const auto coords = straighten(polytabloid(rows, n));
      for (std::size_t s = 0; s < f; ++s) m(s, t) = coords[s];
    }
    s_.push_back(std::move(m));
  }
}

Matrix<BigInt> NaturalRep::transposition(int i, int k) const {
  if (i < 1 || i >= k || k > shape_.size()) throw std::out_of_range("transposition (i, k) needs 1 <= i < k <= n");
  // (i, k) = s_{k-1} ... s_{i+1} s_i s_{i+1} ... s_{k-1}
  Matrix<BigInt> m = adjacent(i);
  for (int j = i + 1; j < k; ++j) m = adjacent(j) * m * adjacent(j);
  return m;
}

Matrix<BigInt> NaturalRep::of(const std::vector<int>& w) const {
  if (static_cast<int>(w.size()) != shape_.size()) throw std::invalid_argument("permutation has the wrong size");
  std::vector<int> cur = w;
  std::vector<int> word;  // w = s_{word.back()} ... s_{word.front()}
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        again = true;
      }
  }
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (cur[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation");
  Matrix<BigInt> m = Matrix<BigInt>::identity(dim());
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * adjacent(*it);
  return m;
}

Matrix<BigInt> jm_matrix(const NaturalRep& rep, int k) {
  if (k < 1 || k > rep.shape().size()) throw std::out_of_range("k must lie in 1..n");
  Matrix<BigInt> w(rep.dim(), rep.dim(), BigInt(0));
  for (int i = 1; i < k; ++i) w = w + rep.transposition(i, k);
  return w;
}

Matrix<BigInt> jm_matrix(const Partition& lambda, int k) { return jm_matrix(NaturalRep(lambda), k); }

JmReport check_conjecture(const Partition& lambda, int k) {
  JmReport r;
  const Matrix<BigInt> w = jm_matrix(lambda, k);
  r.snf = snf(w).diagonal;
  r.conjectured = conjectured_snf(lambda, k);
  r.match = r.snf == r.conjectured;
  r.conjectured_chain = is_divisibility_chain(r.conjectured);
  QPoly expected(Rat(1));
  for (auto [i, j] : positions_of_k(lambda, k)) expected = expected * (QPoly::x() - QPoly(Rat(j - i)));
  r.char_poly_match = char_poly(w) == expected;
  return r;
}

}  // namespace smithkit
