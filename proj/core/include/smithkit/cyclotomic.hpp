#pragma once

#include <map>
#include <string>

#include "smithkit/unipoly.hpp"

namespace smithkit {

/// The d-th cyclotomic polynomial Φ_d(q), d >= 1, with integer coefficients.
/// Built by dividing q^d - 1 by Φ_e for every proper divisor e of d.
const QPoly& cyclotomic(unsigned d);

struct CyclotomicFactorization {
  /// d -> multiplicity of Φ_d.
  std::map<unsigned, unsigned> multiplicity;
  /// What is left after removing every recognized Φ_d; includes the unit.
  QPoly remainder;

  bool fully_cyclotomic() const { return remainder.degree() == 0; }
};

/// Writes p = remainder * prod Φ_d^{m_d} by repeated trial division for
/// d = 1..max_order.
CyclotomicFactorization cyclotomic_factor(const QPoly& p, unsigned max_order = 64);

/// Exact multiplicity of Φ_d in p (p nonzero).
unsigned cyclotomic_valuation(const QPoly& p, unsigned d);

/// E.g. `Phi1^2*Phi2^2*Phi12`, prefixed by the remainder when it is not 1.
std::string factored_string(const CyclotomicFactorization& f, std::string_view var = "q");

}  // namespace smithkit
