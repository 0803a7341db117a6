#include <random>
#include <set>

#include "doctest.h"
#include "smithkit/snf.hpp"
#include "smithkit/varchenko.hpp"

using namespace smithkit;

namespace {

Arrangement lines(std::initializer_list<std::array<long, 3>> hs) {
  Arrangement a(2);
  char name = 'a';
  for (const auto& h : hs) a.add({{Rat(h[0]), Rat(h[1])}, Rat(h[2]), std::string(1, name++)});
  return a;
}

Arrangement random_arrangement(std::mt19937_64& eng, std::size_t dim, std::size_t k) {
  Arrangement a(dim);
  std::uniform_int_distribution<long> c(-3, 3);
  while (a.size() < k) {
    std::vector<Rat> n(dim);
    bool zero = true;
    for (auto& x : n) {
      x = c(eng);
      zero = zero && x == 0;
    }
    if (zero) continue;
    try {
      a.add({n, Rat(c(eng)), "h" + std::to_string(a.size())});
    } catch (const std::invalid_argument&) {
    }
  }
  return a;
}

std::vector<std::int8_t> sign_vector(const Arrangement& a, const std::vector<Rat>& x) {
  std::vector<std::int8_t> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat v = -a[i].offset;
    for (std::size_t j = 0; j < x.size(); ++j) v += a[i].normal[j] * x[j];
    s.push_back(static_cast<std::int8_t>(sgn(v)));
  }
  return s;
}

// Points of F_p^dim on no hyperplane, for arrangements with integer data.
long points_off(const Arrangement& a, long p) {
  const std::size_t d = a.dim();
  std::vector<long> x(d, 0);
  long count = 0;
  for (;;) {
    bool off = true;
    for (std::size_t i = 0; i < a.size() && off; ++i) {
      long v = -a[i].offset.get_num().get_si();
      for (std::size_t j = 0; j < d; ++j) v += a[i].normal[j].get_num().get_si() * x[j];
      off = ((v % p) + p) % p != 0;
    }
    count += off;
    std::size_t j = 0;
    while (j < d && ++x[j] == p) x[j++] = 0;
    if (j == d) return count;
  }
}

}  // namespace

TEST_CASE("regions found by sampling are all enumerated") {
  std::mt19937_64 eng(21);
  std::uniform_int_distribution<long> coord(-4000, 4000);
  for (int t = 0; t < 12; ++t) {
    const std::size_t dim = 2 + t % 2;
    const auto a = random_arrangement(eng, dim, 3 + t % 4);
    const auto regions = enumerate_regions(a);
    std::set<std::vector<std::int8_t>> known;
    for (const auto& r : regions) known.insert(r.signs);
    CHECK(known.size() == regions.size());
    std::set<std::vector<std::int8_t>> hit;
    for (int s = 0; s < 20000; ++s) {
      std::vector<Rat> x(dim);
      for (auto& v : x) v = Rat(coord(eng), 997);
      const auto sv = sign_vector(a, x);
      if (std::find(sv.begin(), sv.end(), 0) != sv.end()) continue;
      CHECK(known.count(sv) == 1);
      hit.insert(sv);
    }
    CHECK(hit.size() <= known.size());
    // Zaslavsky: the region count is |chi(-1)|.
    CHECK(abs(char_poly(a).evaluate(Rat(-1))) == Rat(static_cast<long>(regions.size())));
  }
}

TEST_CASE("generic lines") {
  const auto a = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, -1, 3}});
  CHECK(enumerate_regions(a).size() == 11);
  CHECK(semigeneric_check(a).semigeneric);
  CHECK(char_poly_coefficients(a) == std::vector<BigInt>{1, 4, 6});
}

TEST_CASE("characteristic polynomial counts points over F_p") {
  std::mt19937_64 eng(17);
  for (int t = 0; t < 6; ++t) {
    const std::size_t dim = 2 + t % 2;
    const auto a = random_arrangement(eng, dim, 3 + t % 3);
    const long p = dim == 2 ? 101 : 37;
    CHECK(char_poly(a).evaluate(Rat(p)) == Rat(points_off(a, p)));
  }
  CHECK(char_poly(Arrangement::braid(4)) == QPoly({Rat(0), Rat(-6), Rat(11), Rat(-6), Rat(1)}));
}

TEST_CASE("intersection poset") {
  const auto poset = intersection_poset(Arrangement::braid(3));
  CHECK(poset.front().members.empty());
  CHECK(poset.front().mobius == 1);
  CHECK(poset.size() == 5);  // ambient, three planes, the line x1 = x2 = x3
  CHECK(poset.back().members.size() == 3);
  CHECK(poset.back().mobius == 2);
}

TEST_CASE("two parallel lines and a transversal") {
  Arrangement a(2);
  a.add({{Rat(0), Rat(1)}, Rat(0), "a"});
  a.add({{Rat(0), Rat(1)}, Rat(1), "b"});
  a.add({{Rat(1), Rat(0)}, Rat(0), "c"});
  const auto regions = enumerate_regions(a);
  CHECK(regions.size() == 6);
  const auto v = varchenko_matrix(a, regions);
  for (std::size_t i = 0; i < v.rows(); ++i) {
    CHECK(v(i, i) == MultiPoly(1));
    for (std::size_t j = 0; j < v.cols(); ++j) CHECK(v(i, j) == v(j, i));
  }
  const auto d = gz_diagonal(a);
  CHECK(d.size() == 6);
  const auto r = verify_gz_by_specialization(a);
  CHECK(r.match);
  const QPoly one_minus_q2({Rat(1), Rat(0), Rat(-1)});
  CHECK(r.snf == snf_of_diagonal(std::vector<QPoly>{QPoly(Rat(1)), one_minus_q2, one_minus_q2, one_minus_q2,
                                                     one_minus_q2 * one_minus_q2, one_minus_q2 * one_minus_q2}));
}

TEST_CASE("concurrent lines are refused") {
  const auto a = lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  const auto v = semigeneric_check(a);
  CHECK_FALSE(v.semigeneric);
  CHECK(v.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(gz_diagonal(a), NotSemigeneric);
}

TEST_CASE("cyclotomic counts follow the characteristic polynomial") {
  std::vector<Arrangement> cases{lines({{0, 1, 0}, {0, 1, 1}, {1, 0, 0}}), lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}),
                                 lines({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), Arrangement::braid(3),
                                 Arrangement::braid(4)};
  Arrangement space(3);
  space.add({{Rat(1), Rat(0), Rat(0)}, Rat(0), "x"});
  space.add({{Rat(0), Rat(1), Rat(0)}, Rat(0), "y"});
  space.add({{Rat(0), Rat(0), Rat(1)}, Rat(0), "z"});
  space.add({{Rat(1), Rat(1), Rat(1)}, Rat(1), "w"});
  cases.push_back(space);
  for (const auto& a : cases) {
    const auto d = snf(q_varchenko_matrix(a, enumerate_regions(a))).diagonal;
    auto n = nd_counts(d);
    const auto c = char_poly_coefficients(a);
    for (unsigned i = 0; i < c.size(); ++i) {
      CHECK(BigInt(static_cast<unsigned long>(n[{1u, i}])) == c[i]);
      CHECK(n[{1u, i}] == n[{2u, i}]);
    }
  }
}

TEST_CASE("braid arrangement on permutations agrees with the geometric construction") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = Arrangement::braid(n);
    const auto regions = enumerate_regions(a);
    CHECK(regions.size() == permutations_lex(n).size());
    CHECK(snf(q_varchenko_matrix(a, regions)).diagonal == snf(braid_matrix(n)).diagonal);
  }
  CHECK(inversions({3, 1, 2}) == 2);
  const auto perms = permutations_lex(3);
  CHECK(perms.front() == std::vector<int>{1, 2, 3});
  CHECK(perms.back() == std::vector<int>{3, 2, 1});
}

TEST_CASE("determinant product") {
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_zagier(n, n <= 3);
    CHECK(r.exact_match);
    if (n <= 3) {
      CHECK(r.certificate_checked);
      CHECK(r.certificate_match);
    }
  }
  CHECK(braid_snf(4).diagonal == braid_snf(4, true).diagonal);
}

TEST_CASE("n = 4 table") {
  const auto t = check_braid_n4_table();
  CHECK(t.match);
  CHECK_FALSE(t.printed_match);
  for (const auto& [lambda, ok] : t.blocks) CHECK(ok);
}

TEST_CASE("arrangement files") {
  const auto a = parse_arrangement("2\n0 1 0 a\n0 1 1 b\n1 0 0 c\n");
  CHECK(a.size() == 3);
  CHECK(a[1].offset == 1);
  CHECK(format_arrangement(parse_arrangement(format_arrangement(a))) == format_arrangement(a));
  CHECK_THROWS(parse_arrangement("2\n0 0 1 a\n"));
  CHECK_THROWS(parse_arrangement("2\n1 0 0 a\n2 0 0 b\n"));
  CHECK_THROWS(parse_arrangement("2\n1 0 0 a\n0 1 0 a\n"));
  CHECK_THROWS_AS(enumerate_regions(Arrangement::braid(6)), TooLarge);
}
