#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "smithkit/exactmat.hpp"
#include "smithkit/gridpoly.hpp"

using namespace smithkit;

namespace {

// Sum over partitions mu inside the shape of the product of x over shape \ mu,
// with the shape given by its row lengths and anchored at (r, s).
MultiPoly brute_p(const ExtendedPartition& e, int r, int s) {
  std::vector<int> rows;
  for (int u = r; e.in_base(u, s); ++u) {
    int len = 0;
    while (e.in_base(u, s + len)) ++len;
    rows.push_back(len);
  }
  MultiPoly total(0);
  std::vector<int> mu(rows.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
    if (i == rows.size()) {
      MultiPoly term(1);
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (int b = mu[a]; b < rows[a]; ++b) term *= MultiPoly::variable(ExtendedPartition::var(r + static_cast<int>(a), s + b));
      total += term;
      return;
    }
    for (int v = 0; v <= std::min(cap, rows[i]); ++v) {
      mu[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, rows.empty() ? 0 : rows[0]);
  return total;
}

}  // namespace

TEST_CASE("p_rs matches subdiagram enumeration") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size)) {
      const ExtendedPartition e(lambda);
      for (int r = 1; r <= e.extended().length(); ++r)
        for (int s = 1; s <= e.extended().row(r); ++s) {
          if (!e.in_base(r, s)) {
            CHECK(p_rs(e, r, s) == MultiPoly(1));
            continue;
          }
          CHECK(p_rs(e, r, s) == brute_p(e, r, s));
        }
    }
}

TEST_CASE("determinant of M(1,1) is the product of diagonal leading terms") {
  std::mt19937_64 eng(12);
  for (int size = 1; size <= 7; ++size)
    for (const auto& lambda : partitions_of(size)) {
      const auto r = verify_thm_bessen(lambda);
      CHECK(r.det_match);
      CHECK(r.chain);
      if (size <= 6) {
        CHECK(r.minors_checked);
        CHECK(r.minors_match);
      }
      std::map<std::string, BigInt> point;
      for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) point[ExtendedPartition::var(i, j)] = static_cast<long>(eng() % 7) - 3;
      const auto m = evaluate(r.m, point);
      CHECK(oracle::leibniz_det(m) == evaluate(r.diagonal_product, point));
    }
}

TEST_CASE("specializations") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size)) {
      CHECK(specialize_grid(lambda, GridBinding::Ones).det_ones == 1);
      const auto q = specialize_grid(lambda, GridBinding::Q);
      CHECK(q.det_q.degree() == static_cast<int>([&] {
              int deg = 0;
              for (const auto& d : verify_thm_bessen(lambda).expected) deg += d.total_degree();
              return deg;
            }()));
    }
  CHECK_THROWS_AS(build_M(ExtendedPartition(Partition({2, 1})), 3, 3), OutOfShape);
}
