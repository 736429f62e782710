#include "lapspec/conjectures.hpp"

#include <algorithm>
#include <set>

#include "lapspec/canonical.hpp"
#include "lapspec/graph6.hpp"

namespace lapspec {
namespace {

std::vector<std::string> labels(const std::vector<SpecTarget>& targets) {
  std::vector<std::string> out;
  for (const auto& t : targets) out.push_back(t.label());
  return out;
}

struct ProductInventory {
  std::set<SpecTarget> sets;
  std::vector<std::string> graphs;  // canonical graph6 of each product realizing a doubled set
};

ProductInventory product_inventory(int n, const SearchOptions& options) {
  ProductInventory inv;
  std::set<std::string> seen;
  for (int a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    const int b = n / a;
    const CensusRecord left = laplacian_integral_census(a, options);
    const CensusRecord right = laplacian_integral_census(b, options);
    for (const auto& ga : left.connected) {
      for (const auto& gb : right.connected) {
        const Graph product = canonical_graph(cartesian_product(from_graph6(ga), from_graph6(gb)));
        std::string g6 = to_graph6(product);
        if (!seen.insert(g6).second) continue;
        const auto spectrum = integer_spectrum(product);
        if (!spectrum) continue;
        const auto t = classify_spectrum(*spectrum);
        if (!t || !t->is_doubled()) continue;
        inv.sets.insert(*t);
        inv.graphs.push_back(std::move(g6));
      }
    }
  }
  return inv;
}

std::vector<SpecTarget> expected_cartesian_sets(int n) {
  switch (n) {
    case 4: return {SpecTarget::doubled(1, 3, 4, 2)};
    case 6: return {SpecTarget::doubled(4, 6, 6, 3)};
    case 8: return {SpecTarget::doubled(7, 8, 8, 3)};
    default: return {};
  }
}

OrderVerdict check_snn(int n, const CensusRecord& census) {
  OrderVerdict v;
  v.order = n;
  if (auto it = census.by_spectrum.find(expand(SpecTarget::simple(n, n))); it != census.by_spectrum.end()) {
    v.holds = false;
    v.observed.push_back(SpecTarget::simple(n, n).label());
    v.counterexamples = it->second;
  }
  return v;
}

OrderVerdict check_sinm(int n, const CensusRecord& census) {
  OrderVerdict v;
  v.order = n;
  std::vector<SpecTarget> found;
  for (const auto& [spectrum, graphs] : census.by_spectrum) {
    const auto t = classify_spectrum(spectrum);
    if (!t || !t->is_doubled() || t->j != n) continue;
    found.push_back(*t);
    const auto expected = expected_top_sets(n);
    if (std::find(expected.begin(), expected.end(), *t) == expected.end()) {
      v.counterexamples.insert(v.counterexamples.end(), graphs.begin(), graphs.end());
    }
  }
  std::sort(found.begin(), found.end());
  auto expected = expected_top_sets(n);
  std::sort(expected.begin(), expected.end());
  v.observed = labels(found);
  v.holds = found == expected;
  if (!v.holds && v.counterexamples.empty()) v.note = "an expected set has no realizer";
  return v;
}

OrderVerdict check_uniqueness(int n, const CensusRecord& census) {
  OrderVerdict v;
  v.order = n;
  for (const auto& [spectrum, graphs] : census.by_spectrum) {
    const auto t = classify_spectrum(spectrum);
    if (!t || !t->is_doubled() || t->j >= n || (t->m != n && t->m != n - 1)) continue;
    v.observed.push_back(t->label() + " x" + std::to_string(graphs.size()));
    if (graphs.size() > 1) {
      v.holds = false;
      v.counterexamples.insert(v.counterexamples.end(), graphs.begin(), graphs.end());
    }
  }
  return v;
}

OrderVerdict check_cartesian(int n, const SearchOptions& options) {
  OrderVerdict v;
  v.order = n;
  const ProductInventory inv = product_inventory(n, options);
  const std::vector<SpecTarget> found(inv.sets.begin(), inv.sets.end());
  v.observed = labels(found);
  v.holds = found == expected_cartesian_sets(n);
  if (!v.holds) v.counterexamples = inv.graphs;
  return v;
}

}  // namespace

std::string_view to_string(ConjectureId id) {
  switch (id) {
    case ConjectureId::kSnn: return "S_nn";
    case ConjectureId::kSinm: return "S_inm";
    case ConjectureId::kUniqueness: return "uniqueness";
    case ConjectureId::kCartesian: return "cartesian";
  }
  return "unknown";
}

bool ConjectureCheck::holds() const {
  return std::all_of(orders.begin(), orders.end(), [](const OrderVerdict& v) { return v.holds; });
}

std::vector<SpecTarget> expected_top_sets(int n) {
  switch (n) {
    case 6: return {SpecTarget::doubled(2, 6, 6, 3), SpecTarget::doubled(4, 6, 6, 3)};
    case 8: return {SpecTarget::doubled(1, 8, 8, 5), SpecTarget::doubled(7, 8, 8, 3)};
    default: return {};
  }
}

std::vector<SpecTarget> cartesian_realized_sets(int n, const SearchOptions& options) {
  check_order_cap(n, options);
  const ProductInventory inv = product_inventory(n, options);
  return {inv.sets.begin(), inv.sets.end()};
}

std::vector<ConjectureCheck> check_conjectures(int max_n, const SearchOptions& options) {
  check_order_cap(max_n, options);
  ConjectureCheck snn{ConjectureId::kSnn, 2, max_n, {}};
  ConjectureCheck sinm{ConjectureId::kSinm, 4, max_n, {}};
  ConjectureCheck unique{ConjectureId::kUniqueness, 5, max_n, {}};
  ConjectureCheck cart{ConjectureId::kCartesian, 4, max_n, {}};
  for (int n = 2; n <= max_n; ++n) {
    const CensusRecord census = laplacian_integral_census(n, options);
    snn.orders.push_back(check_snn(n, census));
    if (n >= sinm.min_order) sinm.orders.push_back(check_sinm(n, census));
    if (n >= unique.min_order) unique.orders.push_back(check_uniqueness(n, census));
    if (n >= cart.min_order) cart.orders.push_back(check_cartesian(n, options));
  }
  return {snn, sinm, unique, cart};
}

}  // namespace lapspec
