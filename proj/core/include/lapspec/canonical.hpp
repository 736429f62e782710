#ifndef LAPSPEC_CANONICAL_HPP
#define LAPSPEC_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lapspec/graph.hpp"

namespace lapspec {

/// Isomorphism-class key: two graphs share a CanonicalForm iff they are isomorphic.
/// edge_code is the graph6 record of the canonical relabeling.
struct CanonicalForm {
  int order = 0;
  std::string edge_code;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Exact canonical labeling by equitable-partition refinement and
/// individualization, with automorphism pruning. The canonical graph is the
/// leaf of the search tree whose relabeled adjacency rows are lexicographically
/// largest.
///
/// Keeps scratch state between calls; one instance per thread.
class CanonicalLabeler {
 public:
  /// perm[p] is the original vertex placed at canonical position p.
  const std::vector<int>& labeling(std::span<const std::uint64_t> rows);

  /// Canonical adjacency rows written to `out` (size == rows.size()).
  void canonical_rows(std::span<const std::uint64_t> rows, std::span<std::uint64_t> out);

  /// Number of search-tree leaves visited by the last call.
  long leaves_visited() const noexcept { return leaves_; }

 private:
  struct Partition;
  void refine(Partition& p) const;
  void search(const Partition& p, int depth);
  void leaf(const Partition& p);
  bool pruned(int v, std::uint64_t explored, int depth);

  int n_ = 0;
  const std::uint64_t* rows_ = nullptr;
  std::vector<int> prefix_;
  std::vector<int> best_perm_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> cur_perm_;
  std::vector<int> cur_pos_;
  std::vector<std::uint64_t> cur_rows_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> uf_;
  bool have_best_ = false;
  long leaves_ = 0;
};

CanonicalForm canonical_form(const Graph& g);
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Upper triangle packed in graph6 bit order into one word (first bit most
/// significant). Requires order <= 11.
std::uint64_t pack_upper_triangle(std::span<const std::uint64_t> rows);
Graph unpack_upper_triangle(int order, std::uint64_t code);

}  // namespace lapspec

#endif  // LAPSPEC_CANONICAL_HPP
