#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smithkit {

class MNTooSmall : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Riemann zeta for real s > 1: direct sum with an Euler-Maclaurin tail,
/// absolute error below 1e-15.
double zeta(double s);

/// lim P(alpha_1 = j) for an m x n matrix = 1 / (j^{mn} zeta(mn)).
double alpha1_prob(long j, int m, int n);

/// Value of an Euler product together with a bound on the omitted tail.
struct EulerProduct {
  double value = 0;
  double tail_bound = 0;
  long primes_used = 0;
};

/// sigma(n) = prod_p (1 + p^-2 + ... + p^-n) / (zeta(2) ... zeta(n)), the
/// limiting probability that an n x n cokernel is cyclic. Evaluated prime
/// by prime as prod_p (1 + p^-2 + ... + p^-n)(1 - p^-2)...(1 - p^-n).
EulerProduct ekedahl_sigma(int n);
double sigma_limit();  // 1 / (zeta(6) prod_{j >= 4} zeta(j))

/// rho_1, ..., rho_5: limiting probabilities of at most j generators.
std::array<double, 5> rho_reference();

/// c = 1 / prod_{i >= 1} (1 - 2^-i).
double c_constant();

/// lim P(alpha_1 = 2, alpha_2 = 6) for n x n matrices, n >= 2. The p = 3
/// factor is 3/2 3^{-(n-1)^2} (1 - 3^{-(n-1)^2}) (1 - 3^{-n})^2. For n = 2
/// the product over p > 3 diverges to 0.
EulerProduct ws_example_prob(int n);

enum class EventKind {
  Alpha1Equals,      // alpha_1 = j
  Alpha1CoprimeTo,   // gcd(alpha_1, j) = 1
  AtMostGenerators,  // the cokernel needs at most j generators
  PrefixEquals,      // alpha_1 = a_1, ..., alpha_h = a_h
  LastEquals,        // alpha_min(m,n) = j
};

struct Event {
  EventKind kind = EventKind::Alpha1Equals;
  long j = 1;
  std::vector<long> prefix;
};

/// "a1=3", "a1coprime6", "cyclic", "gens2", "prefix=2:6", "ws" (= prefix=2:6),
/// "last=1". "a1" expands to a1=1..a1=5.
std::vector<Event> parse_events(std::string_view spec);
std::string event_label(const Event& e);

/// Entries uniform in [-k, k].
struct SampleSpec {
  int m = 2;
  int n = 2;
  long k = 100000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct EventStats {
  Event event;
  std::string label;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0;
  double standard_error = 0;  // sqrt(p (1 - p) / N)
};

struct MonteCarloResult {
  std::vector<EventStats> stats;
  std::uint64_t seed = 0;
  /// Samples are drawn in chunks of `chunk` matrices; chunk c uses a
  /// mt19937_64 seeded with splitmix64(seed + c), so results do not depend
  /// on the worker count.
  std::uint64_t chunk = 0;
  static constexpr std::string_view rng = "mt19937_64 seeded per chunk by splitmix64";
};

MonteCarloResult run_monte_carlo(const SampleSpec& spec, const std::vector<Event>& events);

/// Uniform integer in [-k, k] by rejection, identical on every platform.
template <class Engine>
long uniform_entry(Engine& eng, long k) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(k) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  for (;;) {
    const std::uint64_t v = eng();
    if (v < limit) return static_cast<long>(v % range) - k;
  }
}

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace smithkit
