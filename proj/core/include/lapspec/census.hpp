#ifndef LAPSPEC_CENSUS_HPP
#define LAPSPEC_CENSUS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapspec/graph.hpp"
#include "lapspec/spec_target.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {

/// Requested order is beyond what exhaustive enumeration is allowed to do.
class CapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultMaxOrder = 9;
inline constexpr int kLongRunMaxOrder = 10;

struct SearchOptions {
  /// Lifts the cap from 9 to 10.
  bool allow_long_runs = false;
  /// Census files are read from and written to this directory when set.
  std::optional<std::filesystem::path> cache_dir;
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;
};

/// Throws CapError unless 1 <= n <= 9 (10 with allow_long_runs).
void check_order_cap(int n, const SearchOptions& options);

struct CensusRecord {
  int order = 0;
  long long total_connected = 0;
  long long laplacian_integral = 0;
  /// Canonical graph6 of every connected graph of this order, sorted.
  std::vector<std::string> connected;
  /// Laplacian-integral graphs grouped by spectrum; each list sorted.
  std::map<Spectrum, std::vector<std::string>> by_spectrum;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by graph6. Built by adding a vertex with every nonempty
/// neighbour set to each connected graph on n-1 vertices (every connected
/// graph has a vertex whose removal keeps it connected) and deduplicating
/// canonical forms. Work is split by parent graph across threads.
std::vector<Graph> enumerate_connected(int n, const SearchOptions& options = {});

/// Independent generator for cross-checks: scans every upper-triangle bit
/// pattern and keeps the connected ones up to isomorphism. n <= 7.
std::vector<Graph> enumerate_connected_bitmask(int n);

/// Connected and Laplacian-integral counts with the integral graphs grouped by
/// spectrum. Memoised per process, and cached on disk when options.cache_dir is set.
CensusRecord laplacian_integral_census(int n, const SearchOptions& options = {});

/// Every connected graph, up to isomorphism, whose spectrum is expand(t).
/// An empty result certifies that t is not realizable.
std::vector<Graph> find_realizations(const SpecTarget& t, const SearchOptions& options = {});

}  // namespace lapspec

#endif  // LAPSPEC_CENSUS_HPP
