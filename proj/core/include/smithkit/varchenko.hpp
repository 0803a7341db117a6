#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"
#include "smithkit/multipoly.hpp"
#include "smithkit/partition.hpp"
#include "smithkit/unipoly.hpp"

namespace smithkit {

class NotSemigeneric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Affine hyperplane <normal, x> = offset; `label` names its variable a_H.
struct Hyperplane {
  std::vector<Rat> normal;
  Rat offset;
  std::string label;
};

class Arrangement {
 public:
  explicit Arrangement(std::size_t dim = 0) : dim_(dim) {}

  /// Rejects zero normals, wrong dimensions and repeated hyperplanes.
  void add(Hyperplane h);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hs_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }
  const Hyperplane& operator[](std::size_t i) const { return hs_[i]; }

  /// x_i = x_j in R^n for i < j, labelled "h_i_j".
  static Arrangement braid(int n);

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hs_;
};

/// Text form: a line "n", then one line "c1 ... cn b label" per hyperplane.
Arrangement parse_arrangement(std::string_view text);
std::string format_arrangement(const Arrangement& a);

/// signs[h] = +1 when <c, x> > b on the region, -1 otherwise.
struct Region {
  std::vector<std::int8_t> signs;
  friend bool operator==(const Region&, const Region&) = default;
};

/// Exact feasibility of the strict system rows[i] . x < rhs[i], by
/// Fourier-Motzkin elimination.
bool strictly_feasible(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs);

/// All regions, built hyperplane by hyperplane (12 hyperplanes, dimension 4 at most).
std::vector<Region> enumerate_regions(const Arrangement& a);

/// Number of hyperplanes separating two regions.
std::size_t separation(const Region& r, const Region& s);

/// Entry (R, R') = product of a_H over the separating hyperplanes.
Matrix<MultiPoly> varchenko_matrix(const Arrangement& a, const std::vector<Region>& regions);
/// Entry (R, R') = q^{#sep(R, R')}.
Matrix<QPoly> q_varchenko_matrix(const Arrangement& a, const std::vector<Region>& regions);

/// A nonempty intersection of hyperplanes: every hyperplane containing
/// it (`members`), its dimension and its Moebius value. The ambient space
/// has no members.
struct IntersectionElement {
  std::vector<std::size_t> members;
  int dim = 0;
  BigInt mobius;
};

/// The intersection poset ordered by codimension, ambient space first.
std::vector<IntersectionElement> intersection_poset(const Arrangement& a);

struct SemigenericVerdict {
  bool semigeneric = true;
  std::vector<std::size_t> witness;  // k hyperplanes meeting in codimension < k
};

SemigenericVerdict semigeneric_check(const Arrangement& a);

/// prod over H containing x of (1 - a_H^2), one entry per intersection x.
std::vector<MultiPoly> gz_diagonal(const Arrangement& a);

struct GzReport {
  std::vector<QPoly> snf;       // of the q-Varchenko matrix
  std::vector<QPoly> expected;  // Smith form of the specialized diagonal
  bool match = false;
};

GzReport verify_gz_by_specialization(const Arrangement& a);

/// chi(t) = sum over intersections x of mu(x) t^{dim x}.
QPoly char_poly(const Arrangement& a);

/// c_i with chi(t) = sum (-1)^i c_i t^{n-i}.
std::vector<BigInt> char_poly_coefficients(const Arrangement& a);

/// N[(d, i)] = number of Smith entries exactly divisible by Phi_d^i, for
/// every d up to the largest cyclotomic order present (i = 0 included).
std::map<std::pair<unsigned, unsigned>, std::size_t> nd_counts(const std::vector<QPoly>& snf);

// Braid arrangement, realized on permutations.

/// Permutations of 1..n in lexicographic order (one-line notation).
std::vector<std::vector<int>> permutations_lex(int n);
int inversions(const std::vector<int>& w);

/// V_q(B_n) indexed by permutations in lexicographic order; the region of w
/// is x_{w(1)} < ... < x_{w(n)} and two regions are separated by the pairs
/// they order differently (n <= 6).
Matrix<QPoly> braid_matrix(int n);

/// rho_lambda(Gamma_n(q)) = sum over w of q^{inv(w)} rho_lambda(w) in Young's
/// natural representation.
Matrix<QPoly> gamma_block(const Partition& lambda);

struct BraidSnf {
  std::vector<QPoly> diagonal;
  /// Smith form of each gamma block; filled by the isotypic route.
  std::vector<std::pair<Partition, std::vector<QPoly>>> blocks;
  bool isotypic = false;
};

/// Smith form of V_q(B_n) over Q[q]. For n <= 4 by direct elimination,
/// for n = 5 (or when `isotypic`) by splitting Q S_n into f^lambda copies of
/// each irreducible, a constant change of basis and so unimodular over Q[q].
BraidSnf braid_snf(int n, bool isotypic = false);

/// prod_{j=2}^{n} (1 - q^{j(j-1)})^{C(n,j)(j-2)!(n-j+1)!}.
QPoly zagier_formula(int n);

struct ZagierReport {
  QPoly det;
  QPoly formula;
  bool exact_match = false;
  /// Independent check of the full matrix: det V(x) against the formula at
  /// every x in 0..deg modulo several word primes whose product exceeds
  /// twice the coefficient bound.
  bool certificate_checked = false;
  bool certificate_match = false;
  std::size_t primes = 0;
  std::size_t points = 0;
};

/// Exact determinant for n <= 5: direct for n <= 4, product of gamma block
/// determinants for n = 5. The modular certificate is run when requested.
ZagierReport verify_zagier(int n, bool certificate = false);

/// Smith entries of V_lambda for lambda of 4 as cyclotomic exponent maps
/// d -> multiplicity, from Denham-Hanlon's table with the sign row corrected.
std::vector<std::pair<Partition, std::vector<std::map<unsigned, unsigned>>>> braid_n4_table();
/// The sign row exactly as printed there (Phi1 Phi2 Phi4 Phi6).
std::vector<std::map<unsigned, unsigned>> braid_n4_sign_row_as_printed();

struct TableCheck {
  std::vector<QPoly> computed;  // Smith form of V_q(B_4)
  std::vector<QPoly> expected;  // Smith form of the table, rows repeated f^lambda times
  bool match = false;
  /// Per-partition comparison of the gamma block's Smith form with its row.
  std::vector<std::pair<Partition, bool>> blocks;
  /// Aggregate comparison using the sign row as printed.
  bool printed_match = false;
};

TableCheck check_braid_n4_table();

}  // namespace smithkit
