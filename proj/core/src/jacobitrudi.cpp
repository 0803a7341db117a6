#include "smithkit/jacobitrudi.hpp"

#include <algorithm>

#include "smithkit/minors.hpp"
#include "smithkit/snf.hpp"

namespace smithkit {

namespace {

const QPoly& var_n() {
  static const QPoly n = QPoly::x();
  return n;
}

void check_t(const Partition& lambda, int t) {
  if (t < 1 || t < lambda.length())
    throw TTooSmall("t = " + std::to_string(t) + " is smaller than the length of " + to_string(lambda));
}

}  // namespace

std::vector<DiagonalHook> diagonal_hooks(const Partition& lambda) {
  std::vector<DiagonalHook> out;
  for (int k = 1; k <= lambda.rank(); ++k) {
    DiagonalHook h;
    h.index = k;
    for (int j = k; j <= lambda.row(k); ++j) h.cells.emplace_back(k, j);
    for (int i = k + 1; lambda.contains(i, k); ++i) h.cells.emplace_back(i, k);
    for (auto [i, j] : h.cells) h.contents.push_back(Partition::content(i, j));
    std::sort(h.contents.begin(), h.contents.end());
    out.push_back(std::move(h));
  }
  return out;
}

QPoly poly_binomial(long c, int e) {
  if (e < 0) return QPoly();
  QPoly p(Rat(1));
  for (int s = 0; s < e; ++s) p = p * (var_n() + QPoly(Rat(c - s)));
  return p.scaled(Rat(1) / Rat(factorial(static_cast<unsigned long>(e))));
}

Matrix<QPoly> jt_specialized(const Partition& lambda, int t) {
  check_t(lambda, t);
  Matrix<QPoly> m(t, t);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      int k = lambda.row(i) + j - i;
      m(i - 1, j - 1) = k < 0 ? QPoly() : poly_binomial(k - 1, k);
    }
  return m;
}

std::vector<std::vector<int>> hook_content_lists(const Partition& lambda, int t) {
  check_t(lambda, t);
  auto hooks = diagonal_hooks(lambda);
  std::vector<std::vector<int>> out(t);
  for (int i = 1; i <= t; ++i) {
    int k = t - i + 1;
    if (k <= static_cast<int>(hooks.size())) out[i - 1] = hooks[k - 1].contents;
  }
  return out;
}

std::vector<QPoly> hook_content_alphas(const Partition& lambda, int t) {
  std::vector<QPoly> out;
  for (const auto& cs : hook_content_lists(lambda, t)) {
    QPoly p(Rat(1));
    for (int c : cs) p = p * (var_n() + QPoly(Rat(c)));
    out.push_back(p);
  }
  return out;
}

QPoly content_product(const Partition& lambda) {
  QPoly p(Rat(1));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) p = p * (var_n() + QPoly(Rat(Partition::content(i, j))));
  return p;
}

JtReport verify_thm_jt(const Partition& lambda, int t) {
  JtReport r;
  r.snf = snf(jt_specialized(lambda, t)).diagonal;
  r.alphas = hook_content_alphas(lambda, t);
  r.snf_match = r.snf == r.alphas;
  r.chain = is_divisibility_chain(r.alphas);
  r.squarefree = std::all_of(r.alphas.begin(), r.alphas.end(), [](const QPoly& a) {
    return unipoly_gcd(a, a.derivative()).degree() == 0;
  });
  r.det = det_exact(jt_specialized(lambda, t));
  QPoly target = content_product(lambda);
  if (!r.det.is_zero() && r.det.degree() == target.degree()) {
    r.hook_factor = target.leading() / r.det.leading();
    r.det_match = r.det.scaled(r.hook_factor) == target;
  }
  return r;
}

QqPoly q_entry(int k) {
  if (k < 0) return QqPoly();
  QqPoly num(RatFunc(1));
  RatFunc den(1);
  const QqPoly n = QqPoly::x();
  for (int s = 0; s < k; ++s) num = num * (n + QqPoly(RatFunc::bracket(s)));
  for (int j = 1; j <= k; ++j) den *= RatFunc::bracket(j);
  return num.scaled(den.inverse());
}

Matrix<QqPoly> jt_q_specialized(const Partition& lambda, int t) {
  check_t(lambda, t);
  Matrix<QqPoly> m(t, t);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) m(i - 1, j - 1) = q_entry(lambda.row(i) - i + j);
  return m;
}

std::vector<QqPoly> hook_content_gammas(const Partition& lambda, int t) {
  std::vector<QqPoly> out;
  const QqPoly n = QqPoly::x();
  for (const auto& cs : hook_content_lists(lambda, t)) {
    QqPoly p(RatFunc(1));
    for (int c : cs) p = p * (n + QqPoly(RatFunc::bracket(c)));
    out.push_back(p);
  }
  return out;
}

JtqReport verify_thm_jtq(const Partition& lambda, int t) {
  JtqReport r;
  r.snf = snf(jt_q_specialized(lambda, t)).diagonal;
  r.gammas = hook_content_gammas(lambda, t);
  r.snf_match = r.snf == r.gammas;
  return r;
}

QPoly at_q_equals_one(const QqPoly& p) {
  return p.map<Rat>([](const RatFunc& c) { return c.evaluate(Rat(1)); });
}

std::string format_linear_factors(const std::vector<int>& contents, bool q_brackets) {
  if (contents.empty()) return "1";
  std::string out;
  for (int c : contents) {
    if (q_brackets)
      out += "[n" + (c ? std::string(c > 0 ? "+" : "") + std::to_string(c) : std::string()) + "]";
    else if (c == 0)
      out += "n";
    else
      out += "(n" + std::string(c > 0 ? "+" : "") + std::to_string(c) + ")";
  }
  return out;
}

}  // namespace smithkit
