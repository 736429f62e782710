#include "lapspec/cache.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "json.hpp"
#include "lapspec/graph6.hpp"

namespace lapspec {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_atomically(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open for writing", tmp);
    out << content;
    out.flush();
    if (!out) throw CacheError("write failed", tmp);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheError("cannot move cache file into place", target);
  }
}

std::optional<std::string> read_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open for reading", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CacheError("read failed", path);
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Everything a stored record must satisfy; any failure means "recompute".
std::optional<CensusRecord> decode(int order, const std::string& list_text, const std::string& index_text) {
  const json index = json::parse(index_text, nullptr, false);
  if (index.is_discarded() || !index.is_object()) return std::nullopt;
  if (index.value("format_version", -1) != kCacheFormatVersion) return std::nullopt;
  if (index.value("order", -1) != order) return std::nullopt;

  CensusRecord r;
  r.order = order;
  r.connected = split_lines(list_text);
  r.total_connected = static_cast<long long>(r.connected.size());
  if (index.value("total_connected", -1LL) != r.total_connected) return std::nullopt;
  if (!std::is_sorted(r.connected.begin(), r.connected.end())) return std::nullopt;
  for (const auto& g6 : r.connected) {
    const Graph g = from_graph6(g6);
    if (g.order() != order) return std::nullopt;
  }

  const auto spectra = index.find("spectra");
  if (spectra == index.end() || !spectra->is_object()) return std::nullopt;
  for (const auto& [key, lines] : spectra->items()) {
    const Spectrum s = Spectrum::parse(key);
    if (s.size() != order || !lines.is_array() || lines.empty()) return std::nullopt;
    auto& bucket = r.by_spectrum[s];
    for (const auto& line : lines) {
      if (!line.is_number_unsigned()) return std::nullopt;
      const auto at = line.get<std::size_t>();
      if (at >= r.connected.size()) return std::nullopt;
      bucket.push_back(r.connected[at]);
    }
    if (!std::is_sorted(bucket.begin(), bucket.end())) return std::nullopt;
    r.laplacian_integral += static_cast<long long>(bucket.size());
  }
  if (index.value("laplacian_integral", -1LL) != r.laplacian_integral) return std::nullopt;
  return r;
}

}  // namespace

CacheError::CacheError(const std::string& what, std::filesystem::path path)
    : std::runtime_error(what + ": " + path.string()), path_(std::move(path)) {}

fs::path census_list_path(const fs::path& dir, int order) {
  return dir / ("census_n" + std::to_string(order) + ".g6");
}

fs::path census_index_path(const fs::path& dir, int order) {
  return dir / ("census_n" + std::to_string(order) + ".json");
}

void cache_store(const fs::path& dir, const CensusRecord& record) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create cache directory", dir);

  std::string list;
  std::map<std::string, std::size_t> line_of;
  for (std::size_t i = 0; i < record.connected.size(); ++i) {
    list += record.connected[i];
    list += '\n';
    line_of.emplace(record.connected[i], i);
  }

  json spectra = json::object();
  for (const auto& [spectrum, graphs] : record.by_spectrum) {
    json lines = json::array();
    for (const auto& g6 : graphs) {
      const auto it = line_of.find(g6);
      if (it == line_of.end()) throw CacheError("integral graph missing from the connected list", dir);
      lines.push_back(it->second);
    }
    spectra[spectrum.to_string()] = std::move(lines);
  }
  const json index = {
      {"format_version", kCacheFormatVersion},
      {"order", record.order},
      {"total_connected", record.total_connected},
      {"laplacian_integral", record.laplacian_integral},
      {"spectra", std::move(spectra)},
  };

  write_atomically(census_list_path(dir, record.order), list);
  write_atomically(census_index_path(dir, record.order), index.dump(1) + "\n");
}

std::optional<CensusRecord> cache_load(const fs::path& dir, int order) {
  const auto index_text = read_file(census_index_path(dir, order));
  if (!index_text) return std::nullopt;
  const auto list_text = read_file(census_list_path(dir, order));
  if (!list_text) return std::nullopt;
  try {
    return decode(order, *list_text, *index_text);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace lapspec
