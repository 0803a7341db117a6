#include "smithkit/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace smithkit {

const QPoly& cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: order must be positive");
  // Cache is append-only and guarded; returned references stay valid because
  // the map never erases.
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  QPoly p = QPoly::monomial(Rat(1), d) - QPoly(Rat(1));
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto found = cache.find(e);
    QPoly phi_e;
    if (found == cache.end()) {
      // Recursion would retake the lock, so build divisors inline.
      QPoly t = QPoly::monomial(Rat(1), e) - QPoly(Rat(1));
      for (unsigned f = 1; f < e; ++f)
        if (e % f == 0) t = exact_div(t, cache.at(f));
      found = cache.emplace(e, t).first;
    }
    p = exact_div(p, found->second);
  }
  return cache.emplace(d, std::move(p)).first->second;
}

unsigned cyclotomic_valuation(const QPoly& p, unsigned d) {
  if (p.is_zero()) throw std::domain_error("cyclotomic_valuation of zero");
  const QPoly& phi = cyclotomic(d);
  unsigned m = 0;
  QPoly rest = p;
  while (rest.degree() >= phi.degree()) {
    auto [q, r] = divmod(rest, phi);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++m;
  }
  return m;
}

CyclotomicFactorization cyclotomic_factor(const QPoly& p, unsigned max_order) {
  if (p.is_zero()) throw std::domain_error("cyclotomic_factor of zero");
  CyclotomicFactorization out;
  QPoly rest = p;
  for (unsigned d = 1; d <= max_order && rest.degree() > 0; ++d) {
    const QPoly& phi = cyclotomic(d);
    unsigned m = 0;
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++m;
    }
    if (m) out.multiplicity[d] = m;
  }
  out.remainder = std::move(rest);
  return out;
}

std::string factored_string(const CyclotomicFactorization& f, std::string_view var) {
  std::string out;
  bool unit_one = f.remainder == QPoly(Rat(1));
  if (!unit_one) {
    if (f.remainder.degree() == 0) {
      out = to_string(f.remainder.leading());
    } else {
      out = "(" + to_string(f.remainder, var) + ")";
    }
  }
  for (const auto& [d, m] : f.multiplicity) {
    if (!out.empty()) out += "*";
    out += "Phi" + std::to_string(d);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "1" : out;
}

}  // namespace smithkit
