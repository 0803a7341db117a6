// Acceptance run: one PASS/FAIL line per criterion. With --expect-fail N
// (repeatable) the exit status is 0 exactly when the failing criteria are the
// listed ones, so a known negative result stays visible without breaking ctest.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "smithkit/exactmat.hpp"
#include "smithkit/gridpoly.hpp"
#include "smithkit/jacobitrudi.hpp"
#include "smithkit/jucysmurphy.hpp"
#include "smithkit/minors.hpp"
#include "smithkit/randomsnf.hpp"
#include "smithkit/sandpile.hpp"
#include "smithkit/snf.hpp"
#include "smithkit/symfunc.hpp"
#include "smithkit/varchenko.hpp"

using namespace smithkit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "    failed: " << what << "\n";
    }
  }
  void note(const std::string& what) { detail << "    " << what << "\n"; }
};

std::string str(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

MultiGraph random_connected(std::mt19937_64& eng, std::size_t n) {
  for (;;) {
    MultiGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (eng() % 3) g.add_edges(u, v, 1 + static_cast<long>(eng() % 3 == 0));
    if (g.connected()) return g;
  }
}

void c1(Outcome& o) {
  std::mt19937_64 eng(20240601);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    const auto a = oracle::random_matrix(eng, 1 + eng() % 6, 1 + eng() % 6, 30);
    const auto d = snf(a).diagonal;
    BigInt prod = 1;
    for (std::size_t k = 1; k <= d.size(); ++k) {
      prod *= d[k - 1];
      o.require(prod == gcd_of_minors(a, k), "matrix " + std::to_string(t) + ", k = " + std::to_string(k));
    }
    ++checked;
  }
  o.note(std::to_string(checked) + " matrices");
}

void c2(Outcome& o) {
  Matrix<MultiPoly> a(2, 2);
  a(0, 0) = 2;
  a(1, 1) = MultiPoly::variable("x");
  const auto r = refute_snf_by_specialization(a, {MultiPoly(1), 2 * MultiPoly::variable("x")}, "x", 2);
  o.require(r.verdict == SpecializationVerdict::Refuted, "candidate not refuted");
  o.require(r.matrix_snf == std::vector<BigInt>{2, 2} && r.candidate_snf == std::vector<BigInt>{1, 4}, "clash values");
  o.note("at x=2: " + str(r.matrix_snf) + " vs " + str(r.candidate_snf));
}

void c3(Outcome& o) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto g = MultiGraph::complete(n);
    const BigInt nn(static_cast<unsigned long>(n));
    o.require(critical_group(g, 0).factors == std::vector<BigInt>(n - 2, nn), "K_" + std::to_string(n) + " group");
    o.require(tree_count(g) == pow(nn, n - 2), "K_" + std::to_string(n) + " tree count");
  }
}

void c4(Outcome& o) {
  std::mt19937_64 eng(77);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + eng() % 7;
    const auto g = random_connected(eng, n);
    ChipConfig s{std::vector<long>(n), eng() % n};
    for (auto& c : s.chips) c = static_cast<long>(eng() % 15);
    const auto ref = stabilize(g, s);
    for (int k = 0; k < 10; ++k) {
      ChipConfig cur = s;
      std::vector<long> fired(n, 0);
      for (;;) {
        std::vector<std::size_t> unstable;
        for (std::size_t v = 0; v < n; ++v)
          if (v != s.sink && cur.chips[v] >= g.degree(v)) unstable.push_back(v);
        if (unstable.empty()) break;
        const auto v = unstable[eng() % unstable.size()];
        cur = topple(g, cur, v);
        ++fired[v];
      }
      o.require(cur == ref.config && fired == ref.topples, "graph " + std::to_string(t) + ", order " + std::to_string(k));
    }
  }
  o.note("50 graphs x 10 orders");
}

void c5(Outcome& o) {
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
      MultiGraph g(n);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1) g.add_edges(pairs[e].first, pairs[e].second);
      if (!g.connected() || tree_count(g) > 64) continue;
      const auto dyn = critical_group_dynamic(g, 0);
      o.require(dyn.factors == critical_group(g, 0).factors, "graph mask " + std::to_string(mask));
      ++graphs;
    }
  }
  o.note(std::to_string(graphs) + " labelled simple graphs");
}

void c6(Outcome& o) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<BigInt> want(n, BigInt(2));
    want[0] = 1;
    o.require(binomial_snf_stats(2, n).diagonal == want, "a=2, n=" + std::to_string(n));
  }
  const auto d = binomial_snf_stats(3, 8).diagonal;
  o.require(d == std::vector<BigInt>{1, 3, 3, 3, 3, 6, 5394, 270029034}, "a=3, n=8");
  o.note("a=3, n=8: " + str(d));
}

void c7(Outcome& o) {
  for (int n = 1; n <= 12; ++n) {
    const auto r = verify_thm_cai(n);
    o.require(r.peeling_match, "peeling n=" + std::to_string(n));
    BigInt det = 1, want = 1;
    for (const auto& x : r.snf) det *= x;
    for (const auto& lambda : partitions_of(n)) want *= lambda.multiplicity(1) + 1;
    o.require(det == want, "det n=" + std::to_string(n));
  }
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= 4; ++k) {
      const auto d = snf(psi_k_matrix(n, k)).diagonal;
      o.require(d == conjectured_snf_from_multiset(psi_eigenvalue_multiset(n, k)),
                "k d/dp_k p_k, n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
}

void c8(Outcome& o) {
  std::size_t cases = 0;
  for (int size = 1; size <= 10; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int t = lambda.length(); t <= lambda.length() + 3; ++t) {
        const auto r = verify_thm_jt(lambda, t);
        o.require(r.snf_match, to_string(lambda) + ", t=" + std::to_string(t));
        ++cases;
      }
  const auto r = verify_thm_jt(Partition({7, 5, 5, 2}), 4);
  auto rising = [](int lo, int hi) {
    QPoly p(Rat(1));
    for (int c = lo; c <= hi; ++c) p *= QPoly({Rat(c), Rat(1)});
    return p;
  };
  o.require(r.snf == std::vector<QPoly>{QPoly(Rat(1)), rising(0, 2), rising(-2, 3), rising(-3, 6)},
            "(7,5,5,2) display");
  std::size_t qcases = 0;
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int t = lambda.length(); t <= lambda.length() + 1; ++t) {
        o.require(verify_thm_jtq(lambda, t).snf_match, "q: " + to_string(lambda) + ", t=" + std::to_string(t));
        ++qcases;
      }
  o.note(std::to_string(cases) + " (shape, t) pairs over Q[n], " + std::to_string(qcases) + " over Q(q)[n]");
}

void c9(Outcome& o) {
  std::size_t minors = 0, dets = 0;
  for (int size = 1; size <= 9; ++size)
    for (const auto& lambda : partitions_of(size)) {
      const auto r = verify_thm_bessen(lambda);
      o.require(r.det_match, "det " + to_string(lambda));
      ++dets;
      if (size <= 6) {
        o.require(r.minors_checked && r.minors_match, "minors " + to_string(lambda));
        ++minors;
      }
      o.require(specialize_grid(lambda, GridBinding::Ones).det_ones == 1, "all-ones " + to_string(lambda));
    }
  const Partition lambda({3, 2});
  const ExtendedPartition e(lambda);
  const std::map<std::string, MultiPoly> name{{"x_1_1", MultiPoly::variable("a")}, {"x_1_2", MultiPoly::variable("b")},
                                              {"x_1_3", MultiPoly::variable("c")}, {"x_2_1", MultiPoly::variable("d")},
                                              {"x_2_2", MultiPoly::variable("e")}};
  auto named = [&](const MultiPoly& p) {
    std::map<std::string, MultiPoly> used;
    for (const auto& v : p.vars())
      if (name.count(v)) used.emplace(v, name.at(v));
    return substitute(p, used);
  };
  auto m = [](std::string_view w) {
    MultiPoly p(1);
    for (char ch : w) p *= MultiPoly::variable(std::string(1, ch));
    return p;
  };
  o.require(named(p_rs(e, 1, 1)) == m("abcde") + m("bcde") + m("bce") + m("cde") + m("ce") + m("de") + m("c") +
                                        m("e") + 1,
            "P_11 of (3,2)");
  o.require(named(p_rs(e, 1, 2)) == m("bce") + m("ce") + m("c") + m("e") + 1, "P_12 of (3,2)");
  o.require(named(a_rs(e, 1, 1)) == m("abcde") && named(a_rs(e, 1, 2)) == m("bce") && named(a_rs(e, 1, 3)) == m("c") &&
                named(a_rs(e, 2, 1)) == m("de") && named(a_rs(e, 2, 2)) == m("e"),
            "A_rs of (3,2)");
  o.require(named(verify_thm_bessen(lambda).det) == m("abcdee"), "det abcde^2");
  o.note(std::to_string(dets) + " determinants, " + std::to_string(minors) + " minor-gcd checks");
}

void c10(Outcome& o) {
  Arrangement fig(2);
  fig.add({{Rat(0), Rat(1)}, Rat(0), "a"});
  fig.add({{Rat(0), Rat(1)}, Rat(1), "b"});
  fig.add({{Rat(1), Rat(0)}, Rat(0), "c"});
  auto om = [](const char* v) { return MultiPoly(1) - pow(MultiPoly::variable(v), 2); };
  std::vector<MultiPoly> want{MultiPoly(1), om("a"), om("b"), om("c"), om("a") * om("c"), om("b") * om("c")};
  auto diag = gz_diagonal(fig);
  auto key = [](const MultiPoly& p) { return to_string(p); };
  auto by_key = [&](const MultiPoly& x, const MultiPoly& y) { return key(x) < key(y); };
  std::sort(diag.begin(), diag.end(), by_key);
  std::sort(want.begin(), want.end(), by_key);
  o.require(diag == want, "six diagonal entries");
  o.require(verify_gz_by_specialization(fig).match, "q-specialization of the diagonal form");

  Arrangement conc(2);
  conc.add({{Rat(1), Rat(0)}, Rat(0), "a"});
  conc.add({{Rat(0), Rat(1)}, Rat(0), "b"});
  conc.add({{Rat(1), Rat(-1)}, Rat(0), "c"});
  o.require(!semigeneric_check(conc).semigeneric, "concurrent lines refused");

  std::vector<Arrangement> dh{fig, conc, Arrangement::braid(3), Arrangement::braid(4)};
  Arrangement generic(2);
  generic.add({{Rat(1), Rat(0)}, Rat(0), "a"});
  generic.add({{Rat(0), Rat(1)}, Rat(0), "b"});
  generic.add({{Rat(1), Rat(1)}, Rat(1), "c"});
  generic.add({{Rat(1), Rat(-1)}, Rat(3), "d"});
  dh.push_back(generic);
  Arrangement space(3);
  space.add({{Rat(1), Rat(0), Rat(0)}, Rat(0), "x"});
  space.add({{Rat(0), Rat(1), Rat(0)}, Rat(0), "y"});
  space.add({{Rat(0), Rat(0), Rat(1)}, Rat(0), "z"});
  space.add({{Rat(1), Rat(1), Rat(1)}, Rat(1), "w"});
  dh.push_back(space);
  for (std::size_t t = 0; t < dh.size(); ++t) {
    auto n = nd_counts(snf(q_varchenko_matrix(dh[t], enumerate_regions(dh[t]))).diagonal);
    const auto c = char_poly_coefficients(dh[t]);
    for (unsigned i = 0; i < c.size(); ++i)
      o.require(BigInt(static_cast<unsigned long>(n[{1u, i}])) == c[i] && n[{1u, i}] == n[{2u, i}],
                "cyclotomic counts, arrangement " + std::to_string(t) + ", i=" + std::to_string(i));
  }
  o.note(std::to_string(dh.size()) + " arrangements for the cyclotomic counts");

  for (int n = 1; n <= 5; ++n) o.require(verify_zagier(n).exact_match, "determinant product n=" + std::to_string(n));
  o.require(check_braid_n4_table().match, "n=4 isotypic table");

  const auto t0 = std::chrono::steady_clock::now();
  const auto b5 = braid_snf(5);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  QPoly prod(Rat(1));
  for (const auto& d : b5.diagonal) prod *= d;
  o.require(b5.diagonal.size() == 120 && prod == zagier_formula(5).monic(), "n=5 Smith form multiplies to the determinant");
  o.require(secs < 600, "n=5 Smith form within 10 min");
  char buf[64];
  std::snprintf(buf, sizeof buf, "n=5 Smith form in %.2f s", secs);
  o.note(buf);
}

void c11(Outcome& o) {
  const auto r = check_conjecture(Partition({5, 1}), 5);
  o.require(r.snf == std::vector<BigInt>{1, 1, 3, 3, 12}, "(5,1), k=5 Smith form");
  std::vector<BigInt> eig;
  for (auto [i, j] : positions_of_k(Partition({5, 1}), 5)) eig.push_back(j - i);
  o.require(eig == std::vector<BigInt>{4, -1, 3, 3, 3} && r.char_poly_match, "(5,1), k=5 eigenvalues");
  std::size_t total = 0, bad = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int k = 1; k <= n; ++k) {
        const auto c = check_conjecture(lambda, k);
        ++total;
        if (!c.match) {
          ++bad;
          o.require(false, to_string(lambda) + ", k=" + std::to_string(k) + ": computed " + str(c.snf) + ", predicted " +
                               str(c.conjectured));
        }
      }
  o.note(std::to_string(total - bad) + " of " + std::to_string(total) + " (shape, k) cases match");
}

void c12(Outcome& o) {
  char buf[160];
  {
    SampleSpec spec{2, 3, 100000, 1000000, 12, 1};
    const auto r = run_monte_carlo(spec, parse_events("a1"));
    for (const auto& s : r.stats) {
      const double ref = alpha1_prob(s.event.j, 2, 3);
      std::snprintf(buf, sizeof buf, "2x3 %s: %.6f vs %.6f", s.label.c_str(), s.estimate, ref);
      o.require(std::abs(s.estimate - ref) < 0.002, buf);
      o.note(buf);
    }
  }
  o.require(std::abs(sigma_limit() - 0.84693590173) < 1e-9, "cyclic limit analytic value");
  {
    SampleSpec spec{8, 8, 100000, 100000, 8, 1};
    const auto r = run_monte_carlo(spec, parse_events("cyclic,gens2"));
    std::snprintf(buf, sizeof buf, "8x8 cyclic: %.5f vs %.5f", r.stats[0].estimate, sigma_limit());
    o.require(std::abs(r.stats[0].estimate - sigma_limit()) < 0.005, buf);
    o.note(buf);
    std::snprintf(buf, sizeof buf, "8x8 at most 2 generators: %.5f vs %.5f", r.stats[1].estimate, rho_reference()[1]);
    o.require(std::abs(r.stats[1].estimate - rho_reference()[1]) < 0.005, buf);
    o.note(buf);
  }
  std::snprintf(buf, sizeof buf, "c = %.8f", c_constant());
  o.require(std::abs(c_constant() - 3.46275) < 1e-5, buf);
  o.note(buf);
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expect_fail.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "Smith form equals successive minor-gcd quotients (500 random matrices)", 60, c1},
      {2, "diag(2,x) over Z[x]: candidate (1,2x) refuted at x=2", 60, c2},
      {3, "Critical group of K_n is (Z/n)^(n-2) with n^(n-2) spanning trees, n=3..8", 5, c3},
      {4, "Stabilization is independent of toppling order", 60, c4},
      {5, "Group of recurrent configurations matches the reduced Laplacian", 60, c5},
      {6, "Binomial matrices C(2(i+j),i+j) for n<=12 and C(3(i+j),i+j) for n=8", 30, c6},
      {7, "Power-sum operators on symmetric functions: peeling rule and determinant", 60, c7},
      {8, "Jacobi-Trudi hook SNF for |lambda|<=10 incl. lambda=(7,5,5,2), q-analogue for |lambda|<=6", 120, c8},
      {9, "Grid polynomial matrices: determinant, minor gcds, lambda=(3,2) display", 60, c9},
      {10, "Varchenko matrices: diagonal form, cyclotomic counts, braid determinants", 660, c10},
      {11, "Jucys-Murphy Smith form prediction for all lambda with |lambda|<=6", 600, c11},
      {12, "Random integer matrices: limiting densities", 900, c12},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.require(false, "time limit exceeded");
    if (!o.pass) failed.insert(c.id);
    std::printf("%s  %2d. %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs);
    std::fputs(o.detail.str().c_str(), stdout);
    std::fflush(stdout);
  }

  std::printf("%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed == expect_fail) return 0;
  for (int id : expect_fail)
    if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
  for (int id : failed)
    if (!expect_fail.count(id)) std::printf("criterion %d failed unexpectedly\n", id);
  return 1;
}
