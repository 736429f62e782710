#include "lapspec/graph.hpp"

#include <bit>
#include <string>

namespace lapspec {
namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

void check_order(long long order) {
  if (order < 1 || order > Graph::kMaxOrder) {
    throw GraphError("graph order " + std::to_string(order) + " outside [1, 64]");
  }
}

void check_vertex(int v, int order) {
  if (v < 0 || v >= order) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order));
  }
}

}  // namespace

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t valid = low_mask(n);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t r = rows[static_cast<std::size_t>(v)];
    if (r & ~valid) throw GraphError("adjacency row references a vertex beyond the order");
    if (r & bit(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    for (std::uint64_t rest = r; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!(rows[static_cast<std::size_t>(u)] & bit(v))) {
        throw GraphError("adjacency is not symmetric");
      }
    }
  }
  return Graph(std::vector<std::uint64_t>(rows.begin(), rows.end()));
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u, order());
  check_vertex(v, order());
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int Graph::degree(int v) const {
  check_vertex(v, order());
  return std::popcount(rows_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < order(); ++v) {
    for (std::uint64_t higher = rows_[static_cast<std::size_t>(v)] & ~low_mask(v + 1); higher;
         higher &= higher - 1) {
      out.emplace_back(v, std::countr_zero(higher));
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int p = perm[static_cast<std::size_t>(i)];
    check_vertex(p, n);
    if (inverse[static_cast<std::size_t>(p)] != -1) throw GraphError("not a permutation");
    inverse[static_cast<std::size_t>(p)] = i;
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t r = rows_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]; r;
         r &= r - 1) {
      rows[static_cast<std::size_t>(i)] |= bit(inverse[static_cast<std::size_t>(std::countr_zero(r))]);
    }
  }
  return Graph(std::move(rows));
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) {
        b.add_edge(i, j);
      }
    }
  }
  return b.build();
}

GraphBuilder::GraphBuilder(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u, order());
  check_vertex(v, order());
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
  return *this;
}

Graph GraphBuilder::build() const { return Graph::from_rows(rows_); }

Graph make_named(Family family, int k) {
  switch (family) {
    case Family::kEmpty:
      return Graph(k);
    case Family::kComplete: {
      check_order(k);
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(k));
      for (int v = 0; v < k; ++v) rows[static_cast<std::size_t>(v)] = low_mask(k) & ~bit(v);
      return Graph::from_rows(rows);
    }
    case Family::kPath: {
      GraphBuilder b(k);
      for (int v = 0; v + 1 < k; ++v) b.add_edge(v, v + 1);
      return b.build();
    }
    case Family::kCycle: {
      if (k < 3) throw GraphError("cycle needs at least 3 vertices");
      GraphBuilder b(k);
      for (int v = 0; v < k; ++v) b.add_edge(v, (v + 1) % k);
      return b.build();
    }
    case Family::kStar: {
      GraphBuilder b(k);
      for (int v = 1; v < k; ++v) b.add_edge(0, v);
      return b.build();
    }
    case Family::kFriendship: {
      if (k < 1 || 2LL * k + 1 > Graph::kMaxOrder) {
        throw GraphError("friendship parameter " + std::to_string(k) + " out of range");
      }
      GraphBuilder b(2 * k + 1);
      for (int t = 0; t < k; ++t) {
        b.add_edge(0, 2 * t + 1).add_edge(0, 2 * t + 2).add_edge(2 * t + 1, 2 * t + 2);
      }
      return b.build();
    }
  }
  throw GraphError("unknown graph family");
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw GraphError("complete multipartite graph needs at least one part");
  long long total = 0;
  for (int p : parts) {
    if (p < 1) throw GraphError("multipartite part sizes must be positive");
    total += p;
  }
  check_order(total);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(total));
  int start = 0;
  for (int p : parts) {
    const std::uint64_t block = low_mask(start + p) & ~low_mask(start);
    for (int v = start; v < start + p; ++v) {
      rows[static_cast<std::size_t>(v)] = low_mask(static_cast<int>(total)) & ~block;
    }
    start += p;
  }
  return Graph::from_rows(rows);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  check_order(static_cast<long long>(na) + b.order());
  std::vector<std::uint64_t> rows(a.rows().begin(), a.rows().end());
  for (auto r : b.rows()) rows.push_back(r << na);
  return Graph::from_rows(rows);
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  check_order(n);
  const std::uint64_t a_block = low_mask(na);
  const std::uint64_t b_block = low_mask(n) & ~a_block;
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (auto r : a.rows()) rows.push_back(r | b_block);
  for (auto r : b.rows()) rows.push_back((r << na) | a_block);
  return Graph::from_rows(rows);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = ~g.rows()[static_cast<std::size_t>(v)] & low_mask(n) & ~bit(v);
  }
  return Graph::from_rows(rows);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const long long total = static_cast<long long>(a.order()) * b.order();
  check_order(total);
  const int nb = b.order();
  GraphBuilder out(static_cast<int>(total));
  for (int x = 0; x < a.order(); ++x) {
    for (int y = 0; y < nb; ++y) {
      const int v = x * nb + y;
      for (int y2 = y + 1; y2 < nb; ++y2) {
        if (b.adjacent(y, y2)) out.add_edge(v, x * nb + y2);
      }
      for (int x2 = x + 1; x2 < a.order(); ++x2) {
        if (a.adjacent(x, x2)) out.add_edge(v, x2 * nb + y);
      }
    }
  }
  return out.build();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::uint64_t unseen = low_mask(n);
  std::vector<std::vector<int>> components;
  while (unseen) {
    std::uint64_t reached = bit(std::countr_zero(unseen));
    std::uint64_t frontier = reached;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.rows()[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;
    std::vector<int> comp;
    for (std::uint64_t r = reached; r; r &= r - 1) comp.push_back(std::countr_zero(r));
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::uint64_t reached = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.rows()[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == low_mask(n);
}

}  // namespace lapspec
