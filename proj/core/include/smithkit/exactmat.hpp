#pragma once

#include <string>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/minors.hpp"
#include "smithkit/multipoly.hpp"
#include "smithkit/snf.hpp"

namespace smithkit {

/// Finitely generated abelian group Z/d_1 + ... + Z/d_k + Z^free_rank with
/// d_1 | d_2 | ... and every d_i > 1.
struct AbelianGroupDesc {
  std::vector<BigInt> factors;
  std::size_t free_rank = 0;

  /// Order of the torsion part.
  BigInt torsion_order() const;
  friend bool operator==(const AbelianGroupDesc&, const AbelianGroupDesc&) = default;
};

std::string to_string(const AbelianGroupDesc& g);

/// Z^n modulo the row space of `relations` (one relation per row).
AbelianGroupDesc cokernel(const Matrix<BigInt>& relations);

enum class SpecializationVerdict { Consistent, Refuted };

struct SpecializationReport {
  SpecializationVerdict verdict;
  std::vector<BigInt> matrix_snf;     // Smith form of A at the point
  std::vector<BigInt> candidate_snf;  // Smith form of the specialized candidate
};

/// Evaluates a univariate integer-polynomial matrix and a candidate diagonal
/// at `var = point` and compares Smith forms over Z. A mismatch proves the
/// candidate is not a Smith form of A over Z[var].
SpecializationReport refute_snf_by_specialization(const Matrix<MultiPoly>& a, const std::vector<MultiPoly>& candidate,
                                                  const std::string& var, const BigInt& point);

/// det(xI - A) via reduction to Hessenberg form over Q.
QPoly char_poly(const Matrix<BigInt>& a);

/// Entrywise evaluation of a polynomial matrix at a full integer assignment.
Matrix<BigInt> evaluate(const Matrix<MultiPoly>& a, const std::map<std::string, BigInt>& values);

}  // namespace smithkit
