#include "smithkit/randomsnf.hpp"

#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/snf.hpp"

namespace smithkit {

namespace {

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    constexpr long limit = 100000;
    std::vector<bool> composite(limit + 1);
    std::vector<long> out;
    for (long p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (long q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// Omitted primes p > P contribute factors within 3 p^{-4} of 1 once the
// per-prime deviation is O(p^{-4}); their total is below P^{-3}.
double quartic_tail(long largest) { return std::pow(static_cast<double>(largest), -3.0); }

}  // namespace

double zeta(double s) {
  if (!(s > 1)) throw std::domain_error("zeta needs s > 1");
  constexpr long K = 1000;
  long double sum = 0;
  for (long k = K - 1; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -static_cast<long double>(s));
  // sum_{k >= K} k^{-s} = K^{1-s}/(s-1) + K^{-s}/2 + s K^{-s-1}/12 - s(s+1)(s+2) K^{-s-3}/720 + ...
  const long double k = K, ls = s;
  sum += std::pow(k, 1 - ls) / (ls - 1) + std::pow(k, -ls) / 2 + ls * std::pow(k, -ls - 1) / 12 -
         ls * (ls + 1) * (ls + 2) * std::pow(k, -ls - 3) / 720;
  return static_cast<double>(sum);
}

double alpha1_prob(long j, int m, int n) {
  if (m < 1 || n < 1 || m * n <= 1) throw MNTooSmall("alpha_1 limits need mn > 1");
  if (j < 1) throw std::domain_error("j must be positive");
  const int mn = m * n;
  return 1.0 / (std::pow(static_cast<double>(j), mn) * zeta(mn));
}

EulerProduct ekedahl_sigma(int n) {
  if (n < 2) throw std::domain_error("sigma(n) needs n >= 2");
  EulerProduct r;
  long double prod = 1;
  for (long p : small_primes()) {
    const long double x = 1.0L / p;
    long double f = 1, xi = x;
    for (int i = 2; i <= n; ++i) {
      xi *= x;
      f += xi;
    }
    xi = x;
    for (int j = 2; j <= n; ++j) {
      xi *= x;
      f *= 1 - xi;
    }
    prod *= f;
    ++r.primes_used;
  }
  r.value = static_cast<double>(prod);
  r.tail_bound = quartic_tail(small_primes().back());
  return r;
}

double sigma_limit() {
  long double denom = zeta(6);
  for (int j = 4; j < 80; ++j) denom *= zeta(j);
  return static_cast<double>(1 / denom);
}

std::array<double, 5> rho_reference() {
  return {0.846935901735, 0.994626883543, 0.999953295075, 0.999999903035, 0.999999999951};
}

double c_constant() {
  long double prod = 1, x = 1;
  for (int i = 1; i < 200; ++i) {
    x /= 2;
    prod *= 1 - x;
  }
  return static_cast<double>(1 / prod);
}

EulerProduct ws_example_prob(int n) {
  if (n < 2) throw std::domain_error("the (2, 6) example needs n >= 2");
  const int a = (n - 1) * (n - 1), b = n * (n - 1), c = n * n - 1;
  // 1 - P(rank <= 1 over F_p) for an n x n matrix.
  auto rank_two = [&](long double p) {
    long double s = 1;
    for (int i = a; i <= b; ++i) s -= std::pow(p, -i);
    for (int i = b + 1; i <= c; ++i) s += std::pow(p, -i);
    return s;
  };
  EulerProduct r;
  if (n == 2) {
    r.value = 0;  // prod over p of (1 - 1/p - 1/p^2 + 1/p^3) diverges to 0
    return r;
  }
  long double v = std::pow(2.0L, -n * n) * rank_two(2);
  v *= 1.5L * std::pow(3.0L, -a) * (1 - std::pow(3.0L, -a)) * std::pow(1 - std::pow(3.0L, -n), 2);
  for (long p : small_primes()) {
    if (p <= 3) continue;
    v *= rank_two(p);
    ++r.primes_used;
  }
  r.value = static_cast<double>(v);
  r.tail_bound = quartic_tail(small_primes().back());
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Event> parse_events(std::string_view spec) {
  std::vector<Event> out;
  std::size_t start = 0;
  auto number = [](std::string_view t, std::string_view whole) {
    try {
      std::size_t used = 0;
      const long v = std::stol(std::string(t), &used);
      if (used != t.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad number in event '" + std::string(whole) + "'");
    }
  };
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view t = spec.substr(start, end - start);
    start = end + 1;
    if (t.empty()) continue;
    Event e;
    if (t == "a1") {
      for (long j = 1; j <= 5; ++j) out.push_back({EventKind::Alpha1Equals, j, {}});
      continue;
    } else if (t.starts_with("a1coprime")) {
      e = {EventKind::Alpha1CoprimeTo, number(t.substr(9), t), {}};
    } else if (t.starts_with("a1=")) {
      e = {EventKind::Alpha1Equals, number(t.substr(3), t), {}};
    } else if (t == "cyclic") {
      e = {EventKind::AtMostGenerators, 1, {}};
    } else if (t.starts_with("gens")) {
      e = {EventKind::AtMostGenerators, number(t.substr(4), t), {}};
    } else if (t.starts_with("last=")) {
      e = {EventKind::LastEquals, number(t.substr(5), t), {}};
    } else if (t == "ws") {
      e = {EventKind::PrefixEquals, 0, {2, 6}};
    } else if (t.starts_with("prefix=")) {
      e.kind = EventKind::PrefixEquals;
      std::string_view rest = t.substr(7);
      while (!rest.empty()) {
        const auto colon = rest.find(':');
        e.prefix.push_back(number(rest.substr(0, colon), t));
        rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
      }
      if (e.prefix.empty()) throw ParseError("empty prefix event");
    } else {
      throw ParseError("unknown event '" + std::string(t) + "'");
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw ParseError("no events given");
  return out;
}

std::string event_label(const Event& e) {
  switch (e.kind) {
    case EventKind::Alpha1Equals:
      return "alpha1=" + std::to_string(e.j);
    case EventKind::Alpha1CoprimeTo:
      return "gcd(alpha1," + std::to_string(e.j) + ")=1";
    case EventKind::AtMostGenerators:
      return e.j == 1 ? std::string("cyclic") : "gens<=" + std::to_string(e.j);
    case EventKind::LastEquals:
      return "alpha_last=" + std::to_string(e.j);
    case EventKind::PrefixEquals: {
      std::string s;
      for (std::size_t i = 0; i < e.prefix.size(); ++i)
        s += (i ? "," : "") + std::string("alpha") + std::to_string(i + 1) + "=" + std::to_string(e.prefix[i]);
      return s;
    }
  }
  return {};
}

namespace {

bool holds(const Event& e, const std::vector<BigInt>& d, int m, int n) {
  switch (e.kind) {
    case EventKind::Alpha1Equals:
      return d[0] == e.j;
    case EventKind::Alpha1CoprimeTo:
      return int_gcd(d[0], BigInt(e.j)) == 1;
    case EventKind::AtMostGenerators: {
      long gens = std::max(0, m - n);
      for (const auto& v : d) gens += v != 1;
      return gens <= e.j;
    }
    case EventKind::LastEquals:
      return d.back() == e.j;
    case EventKind::PrefixEquals:
      if (e.prefix.size() > d.size()) return false;
      for (std::size_t i = 0; i < e.prefix.size(); ++i)
        if (d[i] != e.prefix[i]) return false;
      return true;
  }
  return false;
}

}  // namespace

MonteCarloResult run_monte_carlo(const SampleSpec& spec, const std::vector<Event>& events) {
  if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (spec.k < 1) throw std::invalid_argument("entry bound k must be positive");
  if (spec.samples < 1) throw std::invalid_argument("need at least one sample");
  constexpr std::uint64_t chunk = 4096;
  const std::uint64_t chunks = (spec.samples + chunk - 1) / chunk;
  std::vector<std::vector<std::uint64_t>> hits(chunks, std::vector<std::uint64_t>(events.size()));
  auto work = [&](std::uint64_t c) {
    std::mt19937_64 eng(splitmix64(spec.seed + c));
    const std::uint64_t count = std::min(chunk, spec.samples - c * chunk);
    Matrix<BigInt> a(spec.m, spec.n);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (int i = 0; i < spec.m; ++i)
        for (int j = 0; j < spec.n; ++j) a(i, j) = uniform_entry(eng, spec.k);
      const auto d = snf(a).diagonal;
      for (std::size_t e = 0; e < events.size(); ++e) hits[c][e] += holds(events[e], d, spec.m, spec.n);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) work(c);
      });
  }
  MonteCarloResult r;
  r.seed = spec.seed;
  r.chunk = chunk;
  for (std::size_t e = 0; e < events.size(); ++e) {
    EventStats st;
    st.event = events[e];
    st.label = event_label(events[e]);
    st.samples = spec.samples;
    for (const auto& h : hits) st.hits += h[e];
    st.estimate = static_cast<double>(st.hits) / static_cast<double>(st.samples);
    st.standard_error = std::sqrt(st.estimate * (1 - st.estimate) / static_cast<double>(st.samples));
    r.stats.push_back(std::move(st));
  }
  return r;
}

}  // namespace smithkit
