#include "lapspec/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>
#include <mutex>
#include <thread>

#include "lapspec/cache.hpp"
#include "lapspec/canonical.hpp"
#include "lapspec/graph6.hpp"

namespace lapspec {
namespace {

constexpr std::size_t kCompactThreshold = std::size_t{1} << 22;

int worker_count(const SearchOptions& options) {
  if (options.threads > 0) return options.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(index, worker) for index in [0, count) on a pool of workers.
template <class Body>
void parallel_for(std::size_t count, int workers, Body body) {
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto run = [&](int worker) {
    for (std::size_t i = next++; i < count; i = next++) body(i, worker);
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        run(w);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void compact(std::vector<std::uint64_t>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

std::vector<Graph> unpack_sorted(int n, std::vector<std::uint64_t> codes) {
  compact(codes);
  // Packed codes follow graph6 bit order, so numeric order is graph6 order.
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(unpack_upper_triangle(n, c));
  return out;
}

bool rows_connected(const std::uint64_t* rows, int n) {
  std::uint64_t reached = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (std::uint64_t{1} << n) - 1;
}

std::mutex memo_mutex;
std::map<int, std::shared_ptr<const CensusRecord>>& memo() {
  static std::map<int, std::shared_ptr<const CensusRecord>> records;
  return records;
}

}  // namespace

void check_order_cap(int n, const SearchOptions& options) {
  const int cap = options.allow_long_runs ? kLongRunMaxOrder : kDefaultMaxOrder;
  if (n < 1 || n > cap) {
    std::string msg = "exhaustive search supports orders 1.." + std::to_string(cap) + ", got " + std::to_string(n);
    if (n == kLongRunMaxOrder) msg += " (order 10 needs the long-run flag)";
    if (n > kLongRunMaxOrder) msg += "; use the constructors for larger orders";
    throw CapError(msg);
  }
}

std::vector<Graph> enumerate_connected(int n, const SearchOptions& options) {
  check_order_cap(n, options);
  if (n == 1) return {Graph(1)};

  const CensusRecord parents_record = laplacian_integral_census(n - 1, options);
  std::vector<Graph> parents;
  parents.reserve(parents_record.connected.size());
  for (const auto& g6 : parents_record.connected) parents.push_back(from_graph6(g6));

  const int workers = worker_count(options);
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
  std::vector<CanonicalLabeler> labelers(static_cast<std::size_t>(workers));
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);

  parallel_for(parents.size(), workers, [&](std::size_t p, int w) {
    auto& codes = found[static_cast<std::size_t>(w)];
    auto& labeler = labelers[static_cast<std::size_t>(w)];
    std::array<std::uint64_t, 16> rows{};
    std::array<std::uint64_t, 16> canon{};
    const auto parent = parents[p].rows();
    for (std::uint64_t s = 1; s < subsets; ++s) {
      for (int v = 0; v < n - 1; ++v) {
        rows[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(v)] | (((s >> v) & 1U) << (n - 1));
      }
      rows[static_cast<std::size_t>(n - 1)] = s;
      const auto count = static_cast<std::size_t>(n);
      labeler.canonical_rows(std::span(rows.data(), count), std::span(canon.data(), count));
      codes.push_back(pack_upper_triangle(std::span(canon.data(), count)));
      if (codes.size() > kCompactThreshold) compact(codes);
    }
  });

  std::vector<std::uint64_t> all;
  for (auto& codes : found) {
    all.insert(all.end(), codes.begin(), codes.end());
    codes = {};
  }
  return unpack_sorted(n, std::move(all));
}

std::vector<Graph> enumerate_connected_bitmask(int n) {
  if (n < 1 || n > 7) throw CapError("bitmask enumeration supports orders 1..7");
  const int pairs = n * (n - 1) / 2;
  CanonicalLabeler labeler;
  std::vector<std::uint64_t> codes;
  std::array<std::uint64_t, 8> rows{};
  std::array<std::uint64_t, 8> canon{};
  const auto count = static_cast<std::size_t>(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    rows.fill(0);
    int k = pairs;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        --k;
        if ((mask >> k) & 1U) {
          rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
          rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
      }
    }
    if (!rows_connected(rows.data(), n)) continue;
    labeler.canonical_rows(std::span(rows.data(), count), std::span(canon.data(), count));
    codes.push_back(pack_upper_triangle(std::span(canon.data(), count)));
    if (codes.size() > kCompactThreshold) compact(codes);
  }
  return unpack_sorted(n, std::move(codes));
}

CensusRecord laplacian_integral_census(int n, const SearchOptions& options) {
  check_order_cap(n, options);
  std::shared_ptr<const CensusRecord> known;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo().find(n); it != memo().end()) known = it->second;
  }
  if (known) {
    if (options.cache_dir && !std::filesystem::exists(census_index_path(*options.cache_dir, n))) {
      cache_store(*options.cache_dir, *known);
    }
    return *known;
  }
  std::optional<CensusRecord> record;
  if (options.cache_dir) record = cache_load(*options.cache_dir, n);

  if (!record) {
    const std::vector<Graph> graphs = enumerate_connected(n, options);
    std::vector<std::optional<Spectrum>> spectra(graphs.size());
    parallel_for(graphs.size(), worker_count(options),
                 [&](std::size_t i, int) { spectra[i] = integer_spectrum(graphs[i]); });

    CensusRecord r;
    r.order = n;
    r.total_connected = static_cast<long long>(graphs.size());
    r.connected.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      std::string g6 = to_graph6(graphs[i]);
      if (spectra[i]) {
        r.by_spectrum[*spectra[i]].push_back(g6);
        ++r.laplacian_integral;
      }
      r.connected.push_back(std::move(g6));
    }
    if (options.cache_dir) cache_store(*options.cache_dir, r);
    record = std::move(r);
  }

  std::lock_guard lock(memo_mutex);
  memo().emplace(n, std::make_shared<const CensusRecord>(*record));
  return *record;
}

std::vector<Graph> find_realizations(const SpecTarget& t, const SearchOptions& options) {
  check_order_cap(t.n, options);
  const CensusRecord record = laplacian_integral_census(t.n, options);
  std::vector<Graph> out;
  if (auto it = record.by_spectrum.find(expand(t)); it != record.by_spectrum.end()) {
    for (const auto& g6 : it->second) out.push_back(from_graph6(g6));
  }
  return out;
}

}  // namespace lapspec
