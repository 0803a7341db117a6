#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// The variable list is kept sorted by name, so two polynomials in the same
/// variables always agree on the monomial order. Binary operations act on the
/// union of the operands' variables. Terms are ordered lexicographically with
/// the first variable most significant; zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, BigInt>;

  MultiPoly() = default;
  MultiPoly(BigInt c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(BigInt(c)) {}   // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, BigInt coef);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws if the polynomial is not constant.
  BigInt constant_value() const;
  /// Variables that occur with a positive exponent.
  std::vector<std::string> active_vars() const;

  /// Highest power of `var` occurring; -1 for zero, 0 if absent.
  int degree_in(const std::string& var) const;
  int total_degree() const;

  /// Lexicographically largest monomial and its coefficient.
  const std::pair<const Exponents, BigInt>& leading_term() const;
  BigInt leading_coeff() const { return leading_term().second; }

  /// Same polynomial expressed over a superset of its variables.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  /// Coefficient of var^k, as a polynomial in the remaining variables
  /// (it keeps the same variable list).
  MultiPoly coeff_of(const std::string& var, unsigned k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const BigInt& s) const;
  /// Multiplies by var^k.
  MultiPoly shifted(const std::string& var, unsigned k) const;

  /// Gcd of the integer coefficients (nonnegative).
  BigInt integer_content() const;

 private:
  friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
  void align_with(const std::vector<std::string>& vars);
  std::size_t var_index(const std::string& var) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned e);

/// Exact quotient a / b in Z[vars]; throws std::domain_error when b does not
/// divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

/// True when b divides a in Z[vars].
bool divides(const MultiPoly& b, const MultiPoly& a);

/// Sign normalization: positive leading coefficient (lexicographic order).
MultiPoly normalize_sign(const MultiPoly& p);

struct GcdBudget {
  std::size_t max_terms = 200000;
};

/// Greatest common divisor in Z[vars], normalized to a positive leading
/// coefficient; gcd(0, 0) = 0. Uses recursion on variables with
/// content/primitive-part splitting and a primitive remainder sequence.
/// Throws BudgetExceeded when an intermediate remainder passes the term limit.
MultiPoly multipoly_gcd(const MultiPoly& a, const MultiPoly& b, const GcdBudget& budget = {});

/// Substitutes polynomials for variables. Variables without a binding stay
/// symbolic. Throws UnknownVariable when a binding names a variable that does
/// not occur in the polynomial's variable list.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);

/// Integer value at a full assignment. Throws UnknownVariable for missing or
/// extraneous bindings.
BigInt evaluate(const MultiPoly& p, const std::map<std::string, BigInt>& values);

/// Converts a polynomial in at most one variable to a univariate polynomial
/// over Q. Throws std::invalid_argument if another variable is present.
QPoly to_qpoly(const MultiPoly& p, const std::string& var);
/// Inverse of to_qpoly for integer-coefficient inputs.
MultiPoly from_qpoly(const QPoly& p, const std::string& var);

/// Human-readable form, e.g. `a*b*c*d*e + b*c*d*e + 1`, descending lex order.
std::string to_string(const MultiPoly& p);

}  // namespace smithkit
