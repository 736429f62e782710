#include "lapspec/canonical.hpp"

#include <array>
#include <bit>
#include <numeric>

#include "lapspec/graph6.hpp"

namespace lapspec {
namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
constexpr std::size_t kMaxGenerators = 64;

}  // namespace

struct CanonicalLabeler::Partition {
  std::array<std::uint64_t, Graph::kMaxOrder> cell{};
  int count = 0;
};

// Splits every cell by the number of neighbours each vertex has in every other
// cell until the partition is equitable. Fragments are ordered by ascending
// neighbour count, so the result depends only on structure, not on labels.
void CanonicalLabeler::refine(Partition& p) const {
  std::array<int, Graph::kMaxOrder> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count; ++s) {
      const std::uint64_t splitter = p.cell[static_cast<std::size_t>(s)];
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t x = p.cell[static_cast<std::size_t>(c)];
        if (std::has_single_bit(x)) continue;
        int lo = Graph::kMaxOrder;
        int hi = -1;
        for (std::uint64_t r = x; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int k = std::popcount(rows_[v] & splitter);
          count[static_cast<std::size_t>(v)] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;

        std::array<std::uint64_t, Graph::kMaxOrder + 1> fragment{};
        int pieces = 0;
        for (int k = lo; k <= hi; ++k) {
          std::uint64_t m = 0;
          for (std::uint64_t r = x; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            if (count[static_cast<std::size_t>(v)] == k) m |= bit(v);
          }
          if (m) fragment[static_cast<std::size_t>(pieces++)] = m;
        }
        for (int t = p.count - 1; t > c; --t) {
          p.cell[static_cast<std::size_t>(t + pieces - 1)] = p.cell[static_cast<std::size_t>(t)];
        }
        for (int t = 0; t < pieces; ++t) {
          p.cell[static_cast<std::size_t>(c + t)] = fragment[static_cast<std::size_t>(t)];
        }
        p.count += pieces - 1;
        changed = true;
      }
    }
  }
}

bool CanonicalLabeler::pruned(int v, std::uint64_t explored, int depth) {
  std::iota(uf_.begin(), uf_.end(), 0);
  auto find = [this](int a) {
    while (uf_[static_cast<std::size_t>(a)] != a) {
      a = uf_[static_cast<std::size_t>(a)] = uf_[static_cast<std::size_t>(uf_[static_cast<std::size_t>(a)])];
    }
    return a;
  };
  bool any = false;
  for (const auto& gen : generators_) {
    bool fixes_prefix = true;
    for (int d = 0; d < depth && fixes_prefix; ++d) {
      const int u = prefix_[static_cast<std::size_t>(d)];
      fixes_prefix = gen[static_cast<std::size_t>(u)] == u;
    }
    if (!fixes_prefix) continue;
    any = true;
    for (int a = 0; a < n_; ++a) {
      const int ra = find(a);
      const int rb = find(gen[static_cast<std::size_t>(a)]);
      if (ra != rb) uf_[static_cast<std::size_t>(ra)] = rb;
    }
  }
  if (!any) return false;
  const int root = find(v);
  for (std::uint64_t e = explored; e; e &= e - 1) {
    if (find(std::countr_zero(e)) == root) return true;
  }
  return false;
}

void CanonicalLabeler::leaf(const Partition& p) {
  ++leaves_;
  for (int pos = 0; pos < n_; ++pos) {
    const int v = std::countr_zero(p.cell[static_cast<std::size_t>(pos)]);
    cur_perm_[static_cast<std::size_t>(pos)] = v;
    cur_pos_[static_cast<std::size_t>(v)] = pos;
  }
  // 0: equal so far, 1: current is larger, -1: current is smaller.
  int cmp = have_best_ ? 0 : 1;
  for (int pos = 0; pos < n_; ++pos) {
    std::uint64_t row = 0;
    for (std::uint64_t r = rows_[cur_perm_[static_cast<std::size_t>(pos)]]; r; r &= r - 1) {
      row |= bit(cur_pos_[static_cast<std::size_t>(std::countr_zero(r))]);
    }
    cur_rows_[static_cast<std::size_t>(pos)] = row;
    if (cmp == 0) {
      const std::uint64_t best = best_rows_[static_cast<std::size_t>(pos)];
      if (row < best) return;
      if (row > best) cmp = 1;
    }
  }
  if (cmp == 1) {
    best_rows_ = cur_rows_;
    best_perm_ = cur_perm_;
    have_best_ = true;
    return;
  }
  if (generators_.size() >= kMaxGenerators) return;
  std::vector<int> gen(static_cast<std::size_t>(n_));
  bool identity = true;
  for (int pos = 0; pos < n_; ++pos) {
    const int from = cur_perm_[static_cast<std::size_t>(pos)];
    const int to = best_perm_[static_cast<std::size_t>(pos)];
    gen[static_cast<std::size_t>(from)] = to;
    identity = identity && from == to;
  }
  if (!identity) generators_.push_back(std::move(gen));
}

void CanonicalLabeler::search(const Partition& start, int depth) {
  Partition p = start;
  refine(p);
  if (p.count == n_) {
    leaf(p);
    return;
  }
  int target = 0;
  while (std::has_single_bit(p.cell[static_cast<std::size_t>(target)])) ++target;
  const std::uint64_t cell = p.cell[static_cast<std::size_t>(target)];

  std::uint64_t explored = 0;
  for (std::uint64_t r = cell; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    if (explored && pruned(v, explored, depth)) continue;
    explored |= bit(v);
    prefix_[static_cast<std::size_t>(depth)] = v;

    Partition child;
    child.count = p.count + 1;
    for (int t = 0; t < target; ++t) child.cell[static_cast<std::size_t>(t)] = p.cell[static_cast<std::size_t>(t)];
    child.cell[static_cast<std::size_t>(target)] = bit(v);
    child.cell[static_cast<std::size_t>(target + 1)] = cell & ~bit(v);
    for (int t = target + 1; t < p.count; ++t) child.cell[static_cast<std::size_t>(t + 1)] = p.cell[static_cast<std::size_t>(t)];
    search(child, depth + 1);
  }
}

const std::vector<int>& CanonicalLabeler::labeling(std::span<const std::uint64_t> rows) {
  n_ = static_cast<int>(rows.size());
  if (n_ < 1 || n_ > Graph::kMaxOrder) throw GraphError("canonical labeling needs order in [1, 64]");
  rows_ = rows.data();
  const auto n = static_cast<std::size_t>(n_);
  prefix_.assign(n, 0);
  best_perm_.assign(n, 0);
  best_rows_.assign(n, 0);
  cur_perm_.assign(n, 0);
  cur_pos_.assign(n, 0);
  cur_rows_.assign(n, 0);
  uf_.assign(n, 0);
  generators_.clear();
  have_best_ = false;
  leaves_ = 0;

  Partition unit;
  unit.count = 1;
  unit.cell[0] = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
  search(unit, 0);
  return best_perm_;
}

void CanonicalLabeler::canonical_rows(std::span<const std::uint64_t> rows, std::span<std::uint64_t> out) {
  labeling(rows);
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = best_rows_[i];
}

std::vector<int> canonical_labeling(const Graph& g) {
  CanonicalLabeler labeler;
  return labeler.labeling(g.rows());
}

Graph canonical_graph(const Graph& g) {
  CanonicalLabeler labeler;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  labeler.canonical_rows(g.rows(), rows);
  return Graph::from_rows(rows);
}

CanonicalForm canonical_form(const Graph& g) { return {g.order(), to_graph6(canonical_graph(g))}; }

std::uint64_t pack_upper_triangle(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > 11) throw GraphError("packed upper triangle supports order <= 11");
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | ((rows[static_cast<std::size_t>(j)] >> i) & 1U);
  }
  return code;
}

Graph unpack_upper_triangle(int order, std::uint64_t code) {
  if (order > 11) throw GraphError("packed upper triangle supports order <= 11");
  GraphBuilder b(order);
  int k = order * (order - 1) / 2;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      --k;
      if ((code >> k) & 1U) b.add_edge(i, j);
    }
  }
  return b.build();
}

}  // namespace lapspec
