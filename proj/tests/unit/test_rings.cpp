#include <random>

#include "doctest.h"
#include "smithkit/bigint.hpp"
#include "smithkit/cyclotomic.hpp"
#include "smithkit/modp.hpp"
#include "smithkit/multipoly.hpp"
#include "smithkit/ratfunc.hpp"
#include "smithkit/unipoly.hpp"

using namespace smithkit;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

MultiPoly var(const char* n) { return MultiPoly::variable(n); }

}  // namespace

TEST_CASE("integer literals") {
  CHECK(parse_bigint("-123456789012345678901234567890") == BigInt("-123456789012345678901234567890"));
  CHECK(parse_rat("6/-4") == Rat(-3, 2));
  CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("ModP agrees with reduction of BigInt arithmetic") {
  std::mt19937_64 eng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 1000003ULL, 2305843009213693951ULL}) {
    ModP::Scope scope(p);
    for (int t = 0; t < 200; ++t) {
      const long a = static_cast<long>(eng() >> 2) - (1L << 60), b = static_cast<long>(eng() >> 3);
      auto red = [&](const BigInt& v) {
        BigInt r = v % BigInt(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        return r;
      };
      CHECK(BigInt(static_cast<unsigned long>((ModP(a) * ModP(b)).value())) == red(BigInt(a) * b));
      CHECK(BigInt(static_cast<unsigned long>((ModP(a) - ModP(b)).value())) == red(BigInt(a) - b));
      if (ModP(b).value() != 0) CHECK(ModP(a) / ModP(b) * ModP(b) == ModP(a));
    }
  }
  ModP::Scope scope(7);
  CHECK_THROWS_AS(ModP(0).inverse(), std::domain_error);
  CHECK(ModP(Rat(1, 3)) * ModP(3) == ModP(1));
}

TEST_CASE("univariate division and gcd") {
  const QPoly a = qp({-1, 0, 1}), b = qp({1, 1});  // x^2 - 1, x + 1
  const auto [quot, rem] = divmod(a, b);
  CHECK(quot == qp({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(unipoly_gcd(a * qp({2, 1}), b * qp({2, 1}) * qp({5, 0, 1})) == (b * qp({2, 1})).monic());
  CHECK(to_string(qp({1, -2, 0, 3})) == "3*x^3 - 2*x + 1");
}

TEST_CASE("cyclotomic polynomials multiply to q^n - 1") {
  for (unsigned n = 1; n <= 30; ++n) {
    QPoly prod = qp({1});
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    CHECK(prod == QPoly::monomial(Rat(1), n) - qp({1}));
  }
  const auto f = cyclotomic_factor(pow(cyclotomic(1), 3) * cyclotomic(6) * qp({2, 0, 1}));
  CHECK(f.multiplicity.at(1) == 3);
  CHECK(f.multiplicity.at(6) == 1);
  CHECK_FALSE(f.fully_cyclotomic());
}

TEST_CASE("rational functions in q") {
  const RatFunc q = RatFunc::q();
  CHECK(RatFunc::bracket(3) == 1 + q + q * q);
  CHECK(RatFunc::bracket(-2) == -(q.inverse() + q.inverse() * q.inverse()));
  CHECK(RatFunc::bracket(0).is_zero());
  const RatFunc f = (1 + q) / (1 - q * q);
  CHECK(f == (1 - q).inverse());
  CHECK(f.evaluate(Rat(3)) == Rat(-1, 2));
  CHECK_THROWS_AS(f.evaluate(Rat(1)), std::domain_error);
}

TEST_CASE("multivariate gcd recovers planted factors") {
  const MultiPoly x = var("x"), y = var("y"), z = var("z");
  const MultiPoly g = x * y - 3 * z + 1;
  const MultiPoly a = g * (x * x + y) * 2, b = g * (y * z - x) * 6;
  const MultiPoly h = multipoly_gcd(a, b);
  CHECK(normalize_sign(h) == normalize_sign(2 * g));
  CHECK(divides(g, a));
  CHECK_FALSE(divides(x + 1, a));
  CHECK(exact_div(a, g) == 2 * (x * x + y));
}

TEST_CASE("substitution and evaluation") {
  const MultiPoly x = var("x"), y = var("y");
  const MultiPoly p = pow(x + y, 3);
  CHECK(evaluate(p, {{"x", 2}, {"y", -5}}) == -27);
  CHECK(substitute(p, {{"y", MultiPoly(0)}}) == pow(x, 3));
  CHECK(to_qpoly(substitute(p, {{"y", x}}), "x") == qp({0, 0, 0, 8}));
  CHECK_THROWS(substitute(p, {{"w", x}}));
}
