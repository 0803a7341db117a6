#include "doctest.h"
#include "oracles.hpp"
#include "smithkit/exactmat.hpp"
#include "smithkit/jucysmurphy.hpp"
#include "smithkit/snf.hpp"

using namespace smithkit;

namespace {

std::vector<int> compose(const std::vector<int>& w, const std::vector<int>& v) {  // (w v)(i) = w(v(i))
  std::vector<int> r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[v[i] - 1];
  return r;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BigInt trace(const Matrix<BigInt>& a) {
  BigInt t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

}  // namespace

TEST_CASE("standard tableaux") {
  for (int n = 1; n <= 7; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      const auto t = syt_enumerate(lambda);
      CHECK(BigInt(static_cast<unsigned long>(t.size())) == f_lambda(lambda));
      sum += f_lambda(lambda) * f_lambda(lambda);
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("natural representation is an irreducible homomorphism") {
  for (int n = 2; n <= 4; ++n) {
    const auto perms = all_perms(n);
    for (const auto& lambda : partitions_of(n)) {
      const NaturalRep rep(lambda);
      for (const auto& w : perms)
        for (const auto& v : perms) CHECK(rep.of(w) * rep.of(v) == rep.of(compose(w, v)));
      BigInt norm = 0;
      for (const auto& w : perms) norm += trace(rep.of(w)) * trace(rep.of(w));
      CHECK(norm == factorial(n));
      for (int i = 1; i + 1 < n; ++i)
        CHECK(rep.adjacent(i) * rep.adjacent(i + 1) * rep.adjacent(i) ==
              rep.adjacent(i + 1) * rep.adjacent(i) * rep.adjacent(i + 1));
    }
  }
}

TEST_CASE("Jucys-Murphy elements commute and have content eigenvalues") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const NaturalRep rep(lambda);
      for (int k = 1; k <= n; ++k) {
        const auto x = jm_matrix(rep, k);
        QPoly expected(Rat(1));
        for (auto [i, j] : positions_of_k(lambda, k)) expected *= QPoly({Rat(i - j), Rat(1)});
        CHECK(char_poly(x) == expected);
        if (k > 1) CHECK(x * jm_matrix(rep, k - 1) == jm_matrix(rep, k - 1) * x);
      }
    }
}

TEST_CASE("Smith forms agree with Leibniz minor gcds") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int k = 1; k <= n; ++k) {
        const auto x = jm_matrix(lambda, k);
        const auto d = snf(x).diagonal;
        BigInt prod = 1;
        for (std::size_t i = 1; i <= d.size(); ++i) {
          prod *= d[i - 1];
          CHECK(prod == oracle::minor_gcd(x, i));
        }
      }
}

TEST_CASE("conjectured form") {
  const auto r = check_conjecture(Partition({5, 1}), 5);
  CHECK(r.snf == std::vector<BigInt>{1, 1, 3, 3, 12});
  CHECK(r.match);
  CHECK(r.char_poly_match);
  std::vector<Cell> cells = positions_of_k(Partition({5, 1}), 5);
  std::vector<int> contents;
  for (auto [i, j] : cells) contents.push_back(j - i);
  CHECK(contents == std::vector<int>{4, -1, 3, 3, 3});

  // A shape where the prediction differs: the computed form is (..., 2, 2).
  const auto bad = check_conjecture(Partition({3, 1, 1}), 3);
  CHECK(bad.snf == std::vector<BigInt>{1, 1, 1, 1, 2, 2});
  CHECK(bad.conjectured == std::vector<BigInt>{1, 1, 1, 1, 1, 4});
  CHECK_FALSE(bad.match);
  CHECK(bad.char_poly_match);

  for (const auto& lambda : partitions_of(4))
    for (int k = 1; k <= 4; ++k) CHECK(check_conjecture(lambda, k).match);
}
