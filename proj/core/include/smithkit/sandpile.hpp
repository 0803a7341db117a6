#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smithkit/bigint.hpp"
#include "smithkit/matrix.hpp"

namespace smithkit {

class BadSink : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class Disconnected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotToppleable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class SinkTopple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotStable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class Mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class StepLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected loopless multigraph on vertices 0..n-1.
class MultiGraph {
 public:
  explicit MultiGraph(std::size_t n = 0) : n_(n), mu_(n * n, 0) {}

  static MultiGraph complete(std::size_t n);
  static MultiGraph cycle(std::size_t n);
  static MultiGraph path(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  /// Adds `mult` parallel edges between u and v (u != v).
  void add_edges(std::size_t u, std::size_t v, long mult = 1);
  long multiplicity(std::size_t u, std::size_t v) const { return mu_[u * n_ + v]; }
  long degree(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  bool connected() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t n_;
  std::vector<long> mu_;
};

/// Chips per vertex plus the designated sink. The sink's own count is kept
/// at zero; chips sent to it disappear.
struct ChipConfig {
  std::vector<long> chips;
  std::size_t sink = 0;

  friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

/// Invariant factors (all > 1) of the critical group and its order.
struct CriticalGroupDesc {
  std::vector<BigInt> factors;
  BigInt order;

  friend bool operator==(const CriticalGroupDesc&, const CriticalGroupDesc&) = default;
};

Matrix<BigInt> laplacian(const MultiGraph& g);
/// Laplacian with the sink's row and column deleted.
Matrix<BigInt> reduced_laplacian(const MultiGraph& g, std::size_t sink);

/// Number of spanning trees, det of the reduced Laplacian.
BigInt tree_count(const MultiGraph& g);

CriticalGroupDesc critical_group(const MultiGraph& g, std::size_t sink);

/// Fires v once: v loses deg(v) chips and each neighbor u gains mu(u, v).
ChipConfig topple(const MultiGraph& g, const ChipConfig& s, std::size_t v);

bool is_stable(const MultiGraph& g, const ChipConfig& s);

struct Stabilization {
  ChipConfig config;
  std::vector<long> topples;  // times each vertex fired
};

/// Topples unstable vertices until none remain.
Stabilization stabilize(const MultiGraph& g, const ChipConfig& s, std::uint64_t max_steps = 100'000'000);

/// Vertex-wise sum followed by stabilization.
ChipConfig stable_add(const MultiGraph& g, const ChipConfig& a, const ChipConfig& b);

/// Dhar's burning test: fire the sink once and stabilize; the
/// configuration is recurrent iff every other vertex fires exactly once.
bool is_recurrent(const MultiGraph& g, const ChipConfig& s);

/// All stable configurations in lexicographic order of chip vectors.
std::vector<ChipConfig> stable_configs(const MultiGraph& g, std::size_t sink, std::size_t limit = 1'000'000);

struct DynamicGroup {
  std::vector<ChipConfig> elements;             // the critical configurations
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of a (+) b
  std::size_t identity = 0;
  std::vector<BigInt> factors;  // invariant factors > 1 read off element orders
};

/// The critical configurations under stable addition, for graphs with at
/// most 4 non-sink vertices and at most 64 critical configurations.
DynamicGroup critical_group_dynamic(const MultiGraph& g, std::size_t sink);

/// Invariant factors (> 1) of a finite abelian group from the multiset of
/// its element orders.
std::vector<BigInt> invariant_factors_from_orders(const std::vector<std::uint64_t>& orders);

/// Graph text: a line "n sink" then one line "u v [mult]" per edge bundle
/// (0-based vertices, mult defaults to 1). '#' starts a comment.
struct GraphFile {
  MultiGraph graph;
  std::size_t sink = 0;
};
GraphFile parse_graph(std::string_view text);
std::string format_graph(const MultiGraph& g, std::size_t sink);
/// Whitespace-separated chip counts, one per vertex. '#' starts a comment.
ChipConfig parse_config(std::string_view text, std::size_t sink);

}  // namespace smithkit
