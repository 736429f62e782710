#ifndef LAPSPEC_GRAPH_HPP
#define LAPSPEC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lapspec {

/// Thrown when a graph would exceed the packed representation (64 vertices)
/// or a family parameter is outside its domain.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable labeled simple graph on vertices 0..order-1.
///
/// Each vertex row is a single 64-bit word, so order is capped at 64.
/// Rows are always symmetric and loop-free; every constructor validates this.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Builds from adjacency rows; throws GraphError on asymmetry, loops or
  /// bits beyond `rows.size()`.
  static Graph from_rows(std::span<const std::uint64_t> rows);
  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  std::uint64_t neighbors(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  /// Vertex i of the result is vertex perm[i] of this graph.
  Graph relabeled(std::span<const int> perm) const;

  /// Induced subgraph on the given vertices, in the given order.
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

  std::vector<std::uint64_t> rows_;
};

/// Mutable helper for assembling a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  GraphBuilder& add_edge(int u, int v);
  int order() const noexcept { return static_cast<int>(rows_.size()); }
  Graph build() const;

 private:
  std::vector<std::uint64_t> rows_;
};

enum class Family { kEmpty, kComplete, kPath, kCycle, kStar, kFriendship };

/// Standard family member. Star k has k vertices (K_{1,k-1}); friendship k
/// has 2k+1 vertices (K_1 joined with kK_2).
Graph make_named(Family family, int k);
Graph complete_multipartite(std::span<const int> parts);

Graph disjoint_union(const Graph& a, const Graph& b);
/// a's vertices come first, then b's, with all |a|*|b| cross edges.
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
/// Vertex (x, y) gets label x * |b| + y.
Graph cartesian_product(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace lapspec

#endif  // LAPSPEC_GRAPH_HPP
