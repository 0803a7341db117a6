#include "smithkit/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "smithkit/exactmat.hpp"
#include "smithkit/minors.hpp"
#include "smithkit/snf.hpp"

namespace smithkit {

MultiGraph MultiGraph::complete(std::size_t n) {
  MultiGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edges(u, v);
  return g;
}

MultiGraph MultiGraph::cycle(std::size_t n) {
  MultiGraph g(n);
  for (std::size_t u = 0; u < n && n > 1; ++u) g.add_edges(u, (u + 1) % n);
  return g;
}

MultiGraph MultiGraph::path(std::size_t n) {
  MultiGraph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edges(u, u + 1);
  return g;
}

void MultiGraph::add_edges(std::size_t u, std::size_t v, long mult) {
  if (u >= n_ || v >= n_) throw std::out_of_range("add_edges: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edges: loops are not allowed");
  if (mult < 0) throw std::invalid_argument("add_edges: negative multiplicity");
  mu_[u * n_ + v] += mult;
  mu_[v * n_ + u] += mult;
}

long MultiGraph::degree(std::size_t v) const {
  long d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += mu_[v * n_ + u];
  return d;
}

std::vector<std::size_t> MultiGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (mu_[v * n_ + u]) out.push_back(u);
  return out;
}

bool MultiGraph::connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : neighbors(v))
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n_;
}

Matrix<BigInt> laplacian(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  Matrix<BigInt> l(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) l(u, v) = u == v ? BigInt(g.degree(u)) : BigInt(-g.multiplicity(u, v));
  return l;
}

Matrix<BigInt> reduced_laplacian(const MultiGraph& g, std::size_t sink) {
  if (sink >= g.vertex_count()) throw BadSink("sink " + std::to_string(sink) + " is not a vertex");
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != sink) keep.push_back(v);
  return laplacian(g).select(keep, keep);
}

BigInt tree_count(const MultiGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("tree_count: empty graph");
  if (!g.connected()) throw Disconnected("graph is disconnected; it has no spanning tree");
  return det_exact(reduced_laplacian(g, g.vertex_count() - 1));
}

CriticalGroupDesc critical_group(const MultiGraph& g, std::size_t sink) {
  if (sink >= g.vertex_count()) throw BadSink("sink " + std::to_string(sink) + " is not a vertex");
  if (!g.connected()) throw Disconnected("critical group of a disconnected graph");
  AbelianGroupDesc c = cokernel(reduced_laplacian(g, sink));
  CriticalGroupDesc out;
  out.factors = c.factors;
  out.order = c.torsion_order();
  return out;
}

namespace {

void check_shape(const MultiGraph& g, const ChipConfig& s) {
  if (s.chips.size() != g.vertex_count()) throw Mismatch("configuration size does not match the graph");
  if (s.sink >= g.vertex_count()) throw BadSink("sink out of range");
}

}  // namespace

ChipConfig topple(const MultiGraph& g, const ChipConfig& s, std::size_t v) {
  check_shape(g, s);
  if (v == s.sink) throw SinkTopple("the sink never topples");
  if (s.chips[v] < g.degree(v)) throw NotToppleable("vertex " + std::to_string(v) + " has fewer chips than its degree");
  ChipConfig out = s;
  out.chips[s.sink] = 0;
  out.chips[v] -= g.degree(v);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (u != s.sink) out.chips[u] += g.multiplicity(u, v);
  return out;
}

bool is_stable(const MultiGraph& g, const ChipConfig& s) {
  check_shape(g, s);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != s.sink && s.chips[v] >= g.degree(v)) return false;
  return true;
}

Stabilization stabilize(const MultiGraph& g, const ChipConfig& s, std::uint64_t max_steps) {
  check_shape(g, s);
  const std::size_t n = g.vertex_count();
  Stabilization r{s, std::vector<long>(n, 0)};
  auto& c = r.config.chips;
  c[s.sink] = 0;
  std::vector<long> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::deque<std::size_t> queue;
  std::vector<bool> queued(n, false);
  for (std::size_t v = 0; v < n; ++v)
    if (v != s.sink && c[v] >= deg[v] && deg[v] > 0) queue.push_back(v), queued[v] = true;
  std::uint64_t steps = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    queued[v] = false;
    // Fire v as many times as it can in one go.
    long times = c[v] / deg[v];
    if (times == 0) continue;
    steps += static_cast<std::uint64_t>(times);
    if (steps > max_steps) throw StepLimit("stabilize: step limit exceeded");
    c[v] -= times * deg[v];
    r.topples[v] += times;
    for (std::size_t u = 0; u < n; ++u) {
      long m = g.multiplicity(u, v);
      if (!m || u == s.sink) continue;
      c[u] += times * m;
      if (!queued[u] && c[u] >= deg[u]) queue.push_back(u), queued[u] = true;
    }
  }
  return r;
}

ChipConfig stable_add(const MultiGraph& g, const ChipConfig& a, const ChipConfig& b) {
  check_shape(g, a);
  check_shape(g, b);
  if (a.sink != b.sink) throw Mismatch("configurations use different sinks");
  ChipConfig sum = a;
  for (std::size_t v = 0; v < sum.chips.size(); ++v) sum.chips[v] += b.chips[v];
  return stabilize(g, sum).config;
}

bool is_recurrent(const MultiGraph& g, const ChipConfig& s) {
  if (!is_stable(g, s)) throw NotStable("is_recurrent expects a stable configuration");
  if (!g.connected()) throw Disconnected("recurrence on a disconnected graph");
  ChipConfig burnt = s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != s.sink) burnt.chips[v] += g.multiplicity(v, s.sink);
  Stabilization r = stabilize(g, burnt);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != s.sink && r.topples[v] != 1) return false;
  return true;
}

std::vector<ChipConfig> stable_configs(const MultiGraph& g, std::size_t sink, std::size_t limit) {
  if (sink >= g.vertex_count()) throw BadSink("sink out of range");
  const std::size_t n = g.vertex_count();
  std::vector<ChipConfig> out;
  ChipConfig cur{std::vector<long>(n, 0), sink};
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      if (out.size() >= limit) throw TooLarge("too many stable configurations");
      out.push_back(cur);
      return;
    }
    if (v == sink) return self(self, v + 1);
    for (long c = 0; c < g.degree(v); ++c) {
      cur.chips[v] = c;
      self(self, v + 1);
    }
    cur.chips[v] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<BigInt> invariant_factors_from_orders(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t size = orders.size();
  // Prime factorization of the group order.
  std::vector<std::uint64_t> primes;
  std::uint64_t m = size;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  // For each prime, the number of cyclic factors of order >= p^k is
  // log_p(#{x : p^k x = 0} / #{x : p^(k-1) x = 0}).
  std::map<std::uint64_t, std::vector<std::uint64_t>> exps;  // p -> exponents, descending
  for (std::uint64_t p : primes) {
    std::vector<std::uint64_t> at_least;
    std::uint64_t prev = 1, pk = 1;
    while (true) {
      pk *= p;
      std::uint64_t cnt = 0;
      for (std::uint64_t o : orders)
        if (pk % o == 0) ++cnt;
      std::uint64_t ratio = cnt / prev, r = 0;
      while (ratio > 1) ratio /= p, ++r;
      if (r == 0) break;
      at_least.push_back(r);
      prev = cnt;
    }
    // at_least[k-1] = number of factors with exponent >= k.
    std::vector<std::uint64_t> e;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::uint64_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (std::uint64_t c = 0; c < at_least[k] - next; ++c) e.push_back(k + 1);
    }
    std::sort(e.rbegin(), e.rend());
    exps[p] = e;
  }
  std::size_t count = 0;
  for (const auto& [p, e] : exps) count = std::max(count, e.size());
  std::vector<BigInt> out(count, 1);
  for (const auto& [p, e] : exps)
    for (std::size_t i = 0; i < e.size(); ++i) out[count - 1 - i] *= pow(BigInt(static_cast<unsigned long>(p)), e[i]);
  return out;
}

DynamicGroup critical_group_dynamic(const MultiGraph& g, std::size_t sink) {
  if (sink >= g.vertex_count()) throw BadSink("sink out of range");
  if (g.vertex_count() > 5) throw TooLarge("critical_group_dynamic supports at most 4 non-sink vertices");
  if (!g.connected()) throw Disconnected("critical group of a disconnected graph");
  DynamicGroup out;
  for (auto& c : stable_configs(g, sink))
    if (is_recurrent(g, c)) out.elements.push_back(std::move(c));
  const std::size_t k = out.elements.size();
  if (k > 64) throw TooLarge("more than 64 critical configurations");
  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[out.elements[i].chips] = i;
  out.table.assign(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto it = index.find(stable_add(g, out.elements[a], out.elements[b]).chips);
      if (it == index.end()) throw std::logic_error("stable sum of critical configurations is not critical");
      out.table[a][b] = it->second;
    }
  std::size_t e = k;
  for (std::size_t a = 0; a < k && e == k; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < k && ok; ++b) ok = out.table[a][b] == b;
    if (ok) e = a;
  }
  if (e == k) throw std::logic_error("critical configurations have no identity");
  out.identity = e;
  std::vector<std::uint64_t> orders(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::uint64_t o = 1;
    for (std::size_t x = a; x != e; x = out.table[x][a]) ++o;
    orders[a] = o;
  }
  out.factors = invariant_factors_from_orders(orders);
  return out;
}

GraphFile parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<GraphFile> f;
  long n = 0;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> tok;
    for (long x; ls >> x;) tok.push_back(x);
    if (!ls.eof()) throw ParseError("unexpected token in graph file: '" + line + "'");
    if (tok.empty()) continue;
    if (!f) {
      if (tok.size() != 2 || tok[0] <= 0) throw ParseError("graph file must start with 'n sink'");
      n = tok[0];
      if (tok[1] < 0 || tok[1] >= n) throw BadSink("sink " + std::to_string(tok[1]) + " is not a vertex");
      f = GraphFile{MultiGraph(static_cast<std::size_t>(n)), static_cast<std::size_t>(tok[1])};
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3) throw ParseError("edge lines are 'u v [mult]'");
    const long u = tok[0], v = tok[1], m = tok.size() == 3 ? tok[2] : 1;
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
    f->graph.add_edges(static_cast<std::size_t>(u), static_cast<std::size_t>(v), m);
  }
  if (!f) throw ParseError("graph file must start with 'n sink'");
  return std::move(*f);
}

std::string format_graph(const MultiGraph& g, std::size_t sink) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(sink) + "\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (g.multiplicity(u, v))
        out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(g.multiplicity(u, v)) + "\n";
  return out;
}

ChipConfig parse_config(std::string_view text, std::size_t sink) {
  std::istringstream lines{std::string(text)};
  ChipConfig c{{}, sink};
  for (std::string line; std::getline(lines, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    long x;
    while (in >> x) {
      if (x < 0) throw ParseError("chip counts must be nonnegative");
      c.chips.push_back(x);
    }
    if (!in.eof()) throw ParseError("unexpected token in configuration");
  }
  return c;
}

}  // namespace smithkit
