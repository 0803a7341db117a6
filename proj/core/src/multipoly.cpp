#include "smithkit/multipoly.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace smithkit {

namespace {

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool exps_divide(const MultiPoly::Exponents& d, const MultiPoly::Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

// r -= c * x^shift * b, all on the same variable list.
void sub_scaled_shifted(MultiPoly::TermMap& r, const BigInt& c, const MultiPoly::Exponents& shift,
                        const MultiPoly::TermMap& b) {
  MultiPoly::Exponents e(shift.size());
  for (const auto& [be, bc] : b) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = be[i] + shift[i];
    auto it = r.find(e);
    if (it == r.end()) {
      r.emplace(e, -(c * bc));
    } else {
      it->second -= c * bc;
      if (it->second == 0) r.erase(it);
    }
  }
}

}  // namespace

MultiPoly::MultiPoly(BigInt c) {
  if (c != 0) terms_.emplace(Exponents{}, std::move(c));
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, BigInt(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, BigInt coef) {
  if (vars.size() != exps.size()) throw std::invalid_argument("monomial: exponent count mismatch");
  // Sort variables, carrying exponents along; merge duplicates.
  std::vector<std::pair<std::string, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < vars.size(); ++i) pairs.emplace_back(vars[i], exps[i]);
  std::sort(pairs.begin(), pairs.end());
  MultiPoly p;
  Exponents e;
  for (auto& [v, x] : pairs) {
    if (!p.vars_.empty() && p.vars_.back() == v) {
      e.back() += x;
    } else {
      p.vars_.push_back(v);
      e.push_back(x);
    }
  }
  if (coef != 0) p.terms_.emplace(std::move(e), std::move(coef));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

BigInt MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string(*this));
  return terms_.empty() ? BigInt(0) : terms_.begin()->second;
}

std::vector<std::string> MultiPoly::active_vars() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) out.push_back(vars_[i]);
  return out;
}

std::size_t MultiPoly::var_index(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return vars_.size();
  return static_cast<std::size_t>(it - vars_.begin());
}

int MultiPoly::degree_in(const std::string& var) const {
  if (terms_.empty()) return -1;
  std::size_t idx = var_index(var);
  if (idx == vars_.size()) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    best = std::max(best, s);
  }
  return best;
}

const std::pair<const MultiPoly::Exponents, BigInt>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::align_with(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i]) throw std::logic_error("align_with: not a superset");
    pos[i] = static_cast<std::size_t>(it - vars.begin());
  }
  TermMap out;
  for (auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  vars_ = vars;
  terms_ = std::move(out);
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  MultiPoly r = *this;
  r.align_with(union_vars(vars_, vars));
  return r;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, unsigned k) const {
  MultiPoly r;
  r.vars_ = vars_;
  std::size_t idx = var_index(var);
  if (idx == vars_.size()) {
    if (k == 0) r.terms_ = terms_;
    return r;
  }
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents ne = e;
    ne[idx] = 0;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) {
    if (vars_ != o.vars_) align_with(union_vars(vars_, o.vars_));
    return *this;
  }
  if (vars_ != o.vars_) {
    auto u = union_vars(vars_, o.vars_);
    align_with(u);
    MultiPoly oo = o;
    oo.align_with(u);
    return *this += oo;
  }
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto u = union_vars(a.vars_, b.vars_);
    MultiPoly aa = a, bb = b;
    aa.align_with(u);
    bb.align_with(u);
    return aa * bb;
  }
  MultiPoly r;
  r.vars_ = a.vars_;
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto u = union_vars(a.vars_, b.vars_);
  MultiPoly aa = a, bb = b;
  aa.align_with(u);
  bb.align_with(u);
  return aa.terms_ == bb.terms_;
}

MultiPoly MultiPoly::scaled(const BigInt& s) const {
  MultiPoly r;
  r.vars_ = vars_;
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::shifted(const std::string& var, unsigned k) const {
  MultiPoly r = with_vars({var});
  if (k == 0) return r;
  std::size_t idx = r.var_index(var);
  TermMap out;
  for (auto& [e, c] : r.terms_) {
    Exponents ne = e;
    ne[idx] += k;
    out.emplace(std::move(ne), c);
  }
  r.terms_ = std::move(out);
  return r;
}

BigInt MultiPoly::integer_content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

MultiPoly pow(const MultiPoly& base, unsigned e) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (e) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return result;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("multivariate division by zero");
  auto u = union_vars(a.vars_, b.vars_);
  MultiPoly r = a, d = b;
  r.align_with(u);
  d.align_with(u);
  MultiPoly q;
  q.vars_ = u;
  const auto& [ld_e, ld_c] = *d.terms_.rbegin();
  MultiPoly::Exponents shift(u.size());
  while (!r.terms_.empty()) {
    const auto& [lr_e, lr_c] = *r.terms_.rbegin();
    if (!exps_divide(ld_e, lr_e) || !mpz_divisible_p(lr_c.get_mpz_t(), ld_c.get_mpz_t()))
      throw std::domain_error("inexact multivariate division");
    for (std::size_t i = 0; i < u.size(); ++i) shift[i] = lr_e[i] - ld_e[i];
    BigInt c = lr_c / ld_c;
    q.terms_.emplace(shift, c);
    sub_scaled_shifted(r.terms_, c, shift, d.terms_);
  }
  return q;
}

bool divides(const MultiPoly& b, const MultiPoly& a) {
  if (b.is_zero()) return a.is_zero();
  try {
    (void)exact_div(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

MultiPoly normalize_sign(const MultiPoly& p) {
  if (p.is_zero() || p.leading_coeff() > 0) return p;
  return -p;
}

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, const GcdBudget& budget);

// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
MultiPoly content_in(const MultiPoly& p, const std::string& var, const GcdBudget& budget) {
  int d = p.degree_in(var);
  MultiPoly g;
  for (int k = d; k >= 0; --k) {
    MultiPoly c = p.coeff_of(var, static_cast<unsigned>(k));
    if (c.is_zero()) continue;
    g = gcd_rec(g, c, budget);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

MultiPoly primitive_part_in(const MultiPoly& p, const std::string& var, const GcdBudget& budget) {
  if (p.is_zero()) return p;
  MultiPoly c = content_in(p, var, budget);
  return exact_div(p, c);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const std::string& var,
                           const GcdBudget& budget) {
  const int db = b.degree_in(var);
  const MultiPoly lcb = b.coeff_of(var, static_cast<unsigned>(db));
  MultiPoly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) break;
    MultiPoly lcr = r.coeff_of(var, static_cast<unsigned>(dr));
    r = lcb * r - lcr * b.shifted(var, static_cast<unsigned>(dr - db));
    if (r.term_count() > budget.max_terms)
      throw BudgetExceeded("multipoly_gcd: remainder exceeded " + std::to_string(budget.max_terms) + " terms");
  }
  return r;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, const GcdBudget& budget) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  std::vector<std::string> active = union_vars(a.active_vars(), b.active_vars());
  if (active.empty()) return MultiPoly(int_gcd(a.constant_value(), b.constant_value()));

  const std::string& var = active.front();
  MultiPoly ca = content_in(a, var, budget);
  MultiPoly cb = content_in(b, var, budget);
  MultiPoly content = gcd_rec(ca, cb, budget);
  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) return normalize_sign(content);

  MultiPoly p = exact_div(a, ca);
  MultiPoly q = exact_div(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  MultiPoly g;
  while (true) {
    MultiPoly r = pseudo_remainder(p, q, var, budget);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = MultiPoly(1);
      break;
    }
    p = std::move(q);
    q = primitive_part_in(r, var, budget);
  }
  return normalize_sign(content * g);
}

}  // namespace

MultiPoly multipoly_gcd(const MultiPoly& a, const MultiPoly& b, const GcdBudget& budget) {
  MultiPoly g = gcd_rec(a, b, budget);
  // Report over the union of the input variables.
  auto u = union_vars(a.vars(), b.vars());
  return g.with_vars(u);
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  const auto& vars = p.vars();
  for (const auto& [name, value] : bindings) {
    if (!std::binary_search(vars.begin(), vars.end(), name))
      throw UnknownVariable("substitute: unknown variable '" + name + "'");
  }
  std::vector<const MultiPoly*> bound(vars.size(), nullptr);
  std::vector<std::string> free_vars;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    if (it != bindings.end()) {
      bound[i] = &it->second;
    } else {
      free_vars.push_back(vars[i]);
    }
  }
  std::vector<std::map<std::uint32_t, MultiPoly>> power_cache(vars.size());
  MultiPoly result;
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::string> mono_vars;
    MultiPoly::Exponents mono_exps;
    MultiPoly term(c);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      if (bound[i]) {
        auto& cache = power_cache[i];
        auto it = cache.find(e[i]);
        if (it == cache.end()) it = cache.emplace(e[i], pow(*bound[i], e[i])).first;
        term *= it->second;
      } else {
        mono_vars.push_back(vars[i]);
        mono_exps.push_back(e[i]);
      }
    }
    if (!mono_vars.empty()) term *= MultiPoly::monomial(mono_vars, mono_exps, BigInt(1));
    result += term;
  }
  std::vector<std::string> all = free_vars;
  for (const auto& [name, value] : bindings) all = union_vars(all, value.vars());
  return result.with_vars(all);
}

BigInt evaluate(const MultiPoly& p, const std::map<std::string, BigInt>& values) {
  const auto& vars = p.vars();
  for (const auto& [name, value] : values) {
    if (!std::binary_search(vars.begin(), vars.end(), name))
      throw UnknownVariable("evaluate: unknown variable '" + name + "'");
  }
  std::vector<BigInt> v(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = values.find(vars[i]);
    if (it == values.end()) throw std::invalid_argument("evaluate: no value for '" + vars[i] + "'");
    v[i] = it->second;
  }
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(v[i], static_cast<unsigned long>(e[i]));
    sum += t;
  }
  return sum;
}

QPoly to_qpoly(const MultiPoly& p, const std::string& var) {
  for (const auto& v : p.active_vars())
    if (v != var) throw std::invalid_argument("to_qpoly: polynomial involves '" + v + "'");
  int d = p.degree_in(var);
  if (d < 0) return {};
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
  auto it = std::lower_bound(p.vars().begin(), p.vars().end(), var);
  bool present = it != p.vars().end() && *it == var;
  std::size_t idx = static_cast<std::size_t>(it - p.vars().begin());
  for (const auto& [e, coef] : p.terms()) c[present ? e[idx] : 0] = Rat(coef);
  return QPoly(std::move(c));
}

MultiPoly from_qpoly(const QPoly& p, const std::string& var) {
  MultiPoly r;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k].get_den() != 1) throw std::invalid_argument("from_qpoly: non-integer coefficient");
    r += MultiPoly::monomial({var}, {static_cast<std::uint32_t>(k)}, c[k].get_num());
  }
  return r.with_vars({var});
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& vars = p.vars();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    BigInt mag = abs(c);
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace smithkit
