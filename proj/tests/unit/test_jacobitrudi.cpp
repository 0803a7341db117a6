#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "smithkit/jacobitrudi.hpp"
#include "smithkit/minors.hpp"

using namespace smithkit;

namespace {

// Semistandard tableaux of shape lambda with entries in 1..n, by backtracking.
long count_ssyt(const Partition& lambda, int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> t(lambda.length() + 1, std::vector<int>(lambda.row(1) + 1, 0));
  long count = 0;
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    const int lo = std::max(j > 1 ? t[i][j - 1] : 1, i > 1 ? t[i - 1][j] + 1 : 1);
    for (int v = lo; v <= n; ++v) {
      t[i][j] = v;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
  return count;
}

}  // namespace

TEST_CASE("polynomial binomials") {
  for (long c = -3; c <= 3; ++c)
    for (int e = 0; e <= 4; ++e)
      for (long n = 4; n <= 9; ++n) CHECK(poly_binomial(c, e).evaluate(Rat(n)) == Rat(binomial(n + c, e)));
}

TEST_CASE("determinant counts semistandard tableaux") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size)) {
      const int t = lambda.length();
      const auto m = jt_specialized(lambda, t);
      for (int n = 1; n <= 4; ++n) {
        const auto at = m.map([&](const QPoly& p) { return p.evaluate(Rat(n)); });
        CHECK(oracle::leibniz_det(at) == Rat(count_ssyt(lambda, n)));
      }
    }
}

TEST_CASE("diagonal hooks partition the diagram") {
  for (int size = 1; size <= 8; ++size)
    for (const auto& lambda : partitions_of(size)) {
      std::set<std::pair<int, int>> seen;
      const auto hooks = diagonal_hooks(lambda);
      CHECK(static_cast<int>(hooks.size()) == lambda.rank());
      for (const auto& h : hooks)
        for (const auto& c : h.cells) CHECK(seen.insert(c).second);
      CHECK(static_cast<int>(seen.size()) == size);
    }
}

TEST_CASE("Smith form over Q[n] is given by diagonal hooks") {
  for (int size = 1; size <= 7; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int t = lambda.length(); t <= lambda.length() + 2; ++t) {
        const auto r = verify_thm_jt(lambda, t);
        CHECK(r.snf_match);
        CHECK(r.chain);
        CHECK(r.squarefree);
        CHECK(r.det_match);
        if (size <= 5) CHECK(snf_via_minors(jt_specialized(lambda, t)).diagonal == r.snf);
      }
  const auto r = verify_thm_jt(Partition({7, 5, 5, 2}), 4);
  CHECK(format_linear_factors(hook_content_lists(Partition({7, 5, 5, 2}), 4)[3]) ==
        "(n-3)(n-2)(n-1)n(n+1)(n+2)(n+3)(n+4)(n+5)(n+6)");
  CHECK(r.snf_match);
  CHECK_THROWS_AS(jt_specialized(Partition({2, 2, 1}), 2), TTooSmall);
}

TEST_CASE("q-analogue") {
  for (int size = 1; size <= 4; ++size)
    for (const auto& lambda : partitions_of(size)) {
      const int t = lambda.length() + 1;
      const auto r = verify_thm_jtq(lambda, t);
      CHECK(r.snf_match);
      const auto alphas = hook_content_alphas(lambda, t);
      for (std::size_t i = 0; i < alphas.size(); ++i) CHECK(at_q_equals_one(r.gammas[i]) == alphas[i]);
    }
}
