#include "doctest.h"
#include "smithkit/exactmat.hpp"
#include "smithkit/snf.hpp"
#include "smithkit/symfunc.hpp"

using namespace smithkit;

namespace {

bool inside(const Partition& mu, const Partition& lambda) {
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row(i) > lambda.row(i)) return false;
  return true;
}

QPoly product_of_roots(const std::vector<BigInt>& roots) {
  QPoly p(Rat(1));
  for (const auto& r : roots) p *= QPoly({Rat(-r), Rat(1)});
  return p;
}

}  // namespace

TEST_CASE("psi matrix counts common covers") {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    const auto m = psi_matrix(n);
    REQUIRE(m.rows() == parts.size());
    for (const auto& nu : parts)
      for (const auto& lambda : parts) {
        long covers = 0;
        for (const auto& mu : partitions_of(n + 1)) covers += inside(nu, mu) && inside(lambda, mu);
        CHECK(m(partition_index(nu), partition_index(lambda)) == covers);
      }
  }
}

TEST_CASE("psi operators have eigenvalues k (m_k + 1)") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<BigInt> roots;
    for (const auto& lambda : partitions_of(n)) roots.push_back(lambda.multiplicity(1) + 1);
    CHECK(char_poly(psi_matrix(n)) == product_of_roots(roots));
    for (int k = 1; k <= 3; ++k) CHECK(char_poly(psi_k_matrix(n, k)) == product_of_roots(psi_eigenvalue_multiset(n, k)));
  }
}

TEST_CASE("border strips") {
  const auto moves = border_strip_additions(Partition({2, 1}), 3);
  std::vector<std::pair<std::string, int>> got;
  for (const auto& m : moves) got.emplace_back(to_string(m.result), m.height);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<std::string, int>>{{"(2,1,1,1,1)", 2}, {"(2,2,2)", 1}, {"(3,3)", 1}, {"(5,1)", 0}});
  for (const auto& lambda : partitions_of(6)) {
    int addable = 0;
    for (int i = 1; i <= lambda.length() + 1; ++i) addable += i == 1 || lambda.row(i) < lambda.row(i - 1);
    CHECK(static_cast<int>(border_strip_additions(lambda, 1).size()) == addable);
  }
}

TEST_CASE("peeling rule") {
  CHECK(conjectured_snf_from_multiset({2, 2, 3}) == std::vector<BigInt>{1, 2, 6});
  CHECK(conjectured_snf_from_multiset({1, 1, 1}) == std::vector<BigInt>{1, 1, 1});
  for (int n = 1; n <= 10; ++n) {
    const auto r = verify_thm_cai(n);
    CHECK(r.peeling_match);
    CHECK(r.explicit_checked == (n >= 5));
    if (r.explicit_checked) CHECK(r.explicit_match);
    BigInt det = 1, expected = 1;
    for (const auto& d : r.snf) det *= d;
    for (const auto& lambda : partitions_of(n)) expected *= lambda.multiplicity(1) + 1;
    CHECK(det == expected);
  }
}

TEST_CASE("binomial matrices") {
  const auto b = binomial_matrix(3, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(b(i, j) == binomial(3 * (i + j), i + j));
  for (int n = 1; n <= 12; ++n) {
    const auto s = binomial_snf_stats(2, n);
    CHECK(s.diagonal.front() == 1);
    CHECK(std::count(s.diagonal.begin(), s.diagonal.end(), BigInt(2)) == n - 1);
  }
  const auto s = binomial_snf_stats(3, 8);
  CHECK(s.diagonal == std::vector<BigInt>{1, 3, 3, 3, 3, 6, 5394, 270029034});
  CHECK(s.threes == 4);
}
