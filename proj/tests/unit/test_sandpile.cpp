#include <random>
#include <set>

#include "doctest.h"
#include "smithkit/sandpile.hpp"

using namespace smithkit;

namespace {

MultiGraph random_connected(std::mt19937_64& eng, std::size_t n) {
  for (;;) {
    MultiGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (eng() % 2) g.add_edges(u, v, 1 + static_cast<long>(eng() % 2));
    if (g.connected()) return g;
  }
}

// Fires a uniformly random unstable non-sink vertex until none is left.
Stabilization random_order(const MultiGraph& g, ChipConfig s, std::mt19937_64& eng) {
  Stabilization r{s, std::vector<long>(g.vertex_count(), 0)};
  for (;;) {
    std::vector<std::size_t> unstable;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (v != s.sink && r.config.chips[v] >= g.degree(v)) unstable.push_back(v);
    if (unstable.empty()) return r;
    const auto v = unstable[eng() % unstable.size()];
    r.config = topple(g, r.config, v);
    ++r.topples[v];
  }
}

// Recurrent configurations as the closure of the maximal stable configuration
// under "add one chip, then stabilize".
std::set<std::vector<long>> recurrent_by_closure(const MultiGraph& g, std::size_t sink) {
  ChipConfig top{std::vector<long>(g.vertex_count(), 0), sink};
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != sink) top.chips[v] = g.degree(v) - 1;
  std::set<std::vector<long>> seen{top.chips};
  std::vector<ChipConfig> todo{top};
  while (!todo.empty()) {
    const ChipConfig c = todo.back();
    todo.pop_back();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (v == sink) continue;
      ChipConfig d = c;
      ++d.chips[v];
      d = stabilize(g, d).config;
      d.chips[sink] = 0;
      if (seen.insert(d.chips).second) todo.push_back(d);
    }
  }
  return seen;
}

// Spanning trees by brute force over edge subsets of a simple graph.
long count_trees(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      for (long k = 0; k < g.multiplicity(u, v); ++k) edges.emplace_back(u, v);
  long trees = 0;
  for (unsigned long mask = 0; mask < (1UL << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != n - 1) continue;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (std::size_t e = 0; e < edges.size() && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      const auto a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    trees += acyclic;
  }
  return trees;
}

}  // namespace

TEST_CASE("complete graphs") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto k = critical_group(MultiGraph::complete(n), n - 1);
    CHECK(k.factors == std::vector<BigInt>(n - 2, BigInt(static_cast<long>(n))));
    CHECK(k.order == pow(BigInt(static_cast<long>(n)), static_cast<unsigned long>(n - 2)));
    CHECK(tree_count(MultiGraph::complete(n)) == k.order);
  }
  CHECK(critical_group(MultiGraph::cycle(7), 0).factors == std::vector<BigInt>{7});
  CHECK(critical_group(MultiGraph::path(5), 2).factors.empty());
}

TEST_CASE("tree count matches subset enumeration") {
  std::mt19937_64 eng(4);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_connected(eng, 2 + eng() % 4);
    CHECK(tree_count(g) == count_trees(g));
  }
}

TEST_CASE("stabilization does not depend on the toppling order") {
  std::mt19937_64 eng(8);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + eng() % 6;
    const auto g = random_connected(eng, n);
    ChipConfig s{std::vector<long>(n), eng() % n};
    for (auto& c : s.chips) c = static_cast<long>(eng() % 12);
    const auto ref = stabilize(g, s);
    CHECK(is_stable(g, ref.config));
    for (int k = 0; k < 5; ++k) {
      const auto other = random_order(g, s, eng);
      CHECK(other.config == ref.config);
      CHECK(other.topples == ref.topples);
    }
  }
}

TEST_CASE("burning test agrees with the closure of the maximal configuration") {
  std::mt19937_64 eng(6);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + eng() % 4;
    const auto g = random_connected(eng, n);
    const std::size_t sink = eng() % n;
    const auto rec = recurrent_by_closure(g, sink);
    std::size_t count = 0;
    for (auto c : stable_configs(g, sink)) {
      c.chips[sink] = 0;
      const bool r = is_recurrent(g, c);
      CHECK(r == (rec.count(c.chips) == 1));
      count += r;
    }
    CHECK(BigInt(static_cast<unsigned long>(count)) == tree_count(g));
  }
}

TEST_CASE("group of recurrent configurations matches the reduced Laplacian") {
  const auto g = MultiGraph::complete(4);
  const auto d = critical_group_dynamic(g, 0);
  CHECK(d.elements.size() == 16);
  CHECK(d.factors == std::vector<BigInt>{4, 4});
  for (std::size_t a = 0; a < d.elements.size(); ++a) CHECK(d.table[a][d.identity] == a);
  CHECK(invariant_factors_from_orders({1, 2, 2, 2}) == std::vector<BigInt>{2, 2});
  CHECK(invariant_factors_from_orders({1, 2, 4, 4}) == std::vector<BigInt>{4});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(critical_group(MultiGraph::complete(3), 5), BadSink);
  MultiGraph two(4);
  two.add_edges(0, 1);
  two.add_edges(2, 3);
  CHECK_THROWS_AS(critical_group(two, 0), Disconnected);
  const auto g = MultiGraph::complete(3);
  CHECK_THROWS_AS(topple(g, ChipConfig{{0, 1, 5}, 0}, 1), NotToppleable);
  CHECK_THROWS_AS(topple(g, ChipConfig{{9, 1, 1}, 0}, 0), SinkTopple);
  CHECK_THROWS_AS(is_recurrent(g, ChipConfig{{0, 4, 1}, 0}), NotStable);
  CHECK_THROWS_AS(parse_graph("3 0\n0 1\n1 2 2 7\n"), ParseError);
  const auto f = parse_graph("# triangle\n3 1\n0 1\n1 2 2\n0 2\n");
  CHECK(f.sink == 1);
  CHECK(f.graph.multiplicity(1, 2) == 2);
  CHECK(parse_graph(format_graph(f.graph, f.sink)).graph == f.graph);
  CHECK(parse_config("# start\n0 5\n5 # last\n", 0).chips == std::vector<long>{0, 5, 5});
  CHECK_THROWS_AS(parse_config("1 x\n", 0), ParseError);
}
