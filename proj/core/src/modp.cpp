#include "smithkit/modp.hpp"

namespace smithkit {

std::vector<std::uint64_t> word_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  BigInt p = BigInt(1) << 61;
  while (out.size() < count) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    out.push_back(p.get_ui());
  }
  return out;
}

}  // namespace smithkit
