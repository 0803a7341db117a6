#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smithkit/randomsnf.hpp"
#include "smithkit/snf.hpp"

using namespace smithkit;

namespace {

// Number of n x n matrices over F_p of rank <= 1, by enumeration.
long rank_le_one(int n, int p) {
  const int cells = n * n;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  long count = 0;
  std::vector<int> a(cells);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& x : a) {
      x = static_cast<int>(c % p);
      c /= p;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          for (int l = k + 1; l < n && ok; ++l)
            ok = ((a[i * n + k] * a[j * n + l] - a[i * n + l] * a[j * n + k]) % p) == 0;
    count += ok;
  }
  return count;
}

std::vector<long> primes_upto(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("zeta values") {
  const double pi = std::numbers::pi;
  CHECK(zeta(2) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
  CHECK(zeta(4) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-15));
  CHECK(zeta(3) == doctest::Approx(1.2020569031595942).epsilon(1e-15));
  CHECK_THROWS_AS(zeta(1), std::domain_error);
}

TEST_CASE("alpha_1 law") {
  CHECK(alpha1_prob(1, 2, 3) == doctest::Approx(1 / zeta(6)));
  double total = 0;
  for (long j = 1; j <= 2000; ++j) total += alpha1_prob(j, 2, 2);
  CHECK(total == doctest::Approx(1).epsilon(1e-9));
  CHECK_THROWS_AS(alpha1_prob(1, 1, 1), MNTooSmall);
}

TEST_CASE("rank counts over small fields") {
  for (int p : {2, 3}) {
    const long closed = 1 + (p * p * p - 1) * (p * p * p - 1) / (p - 1);
    CHECK(rank_le_one(3, p) == closed);
  }
  CHECK(rank_le_one(2, 5) == 1 + (25 - 1) * (25 - 1) / 4);
}

TEST_CASE("cyclic cokernel densities") {
  CHECK(ekedahl_sigma(2).value == doctest::Approx(1 / zeta(4)).epsilon(1e-12));
  // n = 3: per prime, the probability that the reduction has rank >= 2.
  long double prod = 1;
  for (long p : primes_upto(100000)) {
    const long double pl = p, p3 = pl * pl * pl;
    prod *= 1 - (1 + (p3 - 1) * (p3 - 1) / (pl - 1)) / (p3 * p3 * p3);
  }
  CHECK(ekedahl_sigma(3).value == doctest::Approx(static_cast<double>(prod)).epsilon(1e-12));
  CHECK(ekedahl_sigma(3).tail_bound < 1e-12);
  CHECK(ekedahl_sigma(45).value == doctest::Approx(sigma_limit()).epsilon(1e-12));
  CHECK(sigma_limit() == doctest::Approx(0.84693590173).epsilon(1e-11));
  CHECK(c_constant() == doctest::Approx(3.46274661945506).epsilon(1e-12));
}

TEST_CASE("the (2, 6) example") {
  CHECK(ws_example_prob(2).value == 0);
  const double ws3 = ws_example_prob(3).value;
  CHECK(ws3 > 2.9e-5);
  CHECK(ws3 < 3.1e-5);
  // 3-part alone: alpha_1 prime to 3 and 3 || alpha_2, sampled directly.
  std::mt19937_64 eng(99);
  const long samples = 120000;
  long hits = 0;
  for (long s = 0; s < samples; ++s) {
    const auto d = snf(oracle::random_matrix(eng, 3, 3, 1000000)).diagonal;
    hits += d[0] % 3 != 0 && d[1] % 3 == 0 && d[1] % 9 != 0;
  }
  const double expected = 1.5 / 81 * (1 - 1.0 / 81) * std::pow(1 - 1.0 / 27, 2);
  const double se = std::sqrt(expected * (1 - expected) / samples);
  CHECK(std::abs(static_cast<double>(hits) / samples - expected) < 4 * se);
}

TEST_CASE("uniform entries") {
  std::mt19937_64 eng(1);
  bool lo = false, hi = false;
  for (int i = 0; i < 1000; ++i) {
    const long v = uniform_entry(eng, 1);
    CHECK(v >= -1);
    CHECK(v <= 1);
    lo = lo || v == -1;
    hi = hi || v == 1;
  }
  CHECK(lo);
  CHECK(hi);
}

TEST_CASE("Monte Carlo runs are reproducible and independent of the worker count") {
  const auto events = parse_events("a1,cyclic,gens2,prefix=1:2,last=0,a1coprime6");
  SampleSpec spec{3, 3, 50, 10000, 42, 1};
  const auto one = run_monte_carlo(spec, events);
  spec.workers = 3;
  const auto three = run_monte_carlo(spec, events);
  REQUIRE(one.stats.size() == three.stats.size());
  for (std::size_t i = 0; i < one.stats.size(); ++i) CHECK(one.stats[i].hits == three.stats[i].hits);
  spec.seed = 43;
  const auto other = run_monte_carlo(spec, events);
  bool differs = false;
  for (std::size_t i = 0; i < one.stats.size(); ++i) differs = differs || one.stats[i].hits != other.stats[i].hits;
  CHECK(differs);
  CHECK(one.stats[0].label == "alpha1=1");
}

TEST_CASE("event parsing") {
  CHECK(parse_events("a1").size() == 5);
  CHECK(parse_events("ws")[0].prefix == std::vector<long>{2, 6});
  CHECK(parse_events("gens3")[0].j == 3);
  CHECK_THROWS_AS(parse_events("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_events("a1=x"), ParseError);
  CHECK_THROWS_AS(parse_events(""), ParseError);
}
