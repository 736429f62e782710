#ifndef LAPSPEC_CACHE_HPP
#define LAPSPEC_CACHE_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "lapspec/census.hpp"

namespace lapspec {

class CacheError : public std::runtime_error {
 public:
  CacheError(const std::string& what, std::filesystem::path path);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

inline constexpr int kCacheFormatVersion = 1;

/// <dir>/census_n<k>.g6 and <dir>/census_n<k>.json
std::filesystem::path census_list_path(const std::filesystem::path& dir, int order);
std::filesystem::path census_index_path(const std::filesystem::path& dir, int order);

/// Writes both files atomically (temporary file then rename). Creates dir if
/// needed. Throws CacheError on I/O failure.
void cache_store(const std::filesystem::path& dir, const CensusRecord& record);

/// nullopt when the files are missing, the index has another format version,
/// or anything is inconsistent. Throws CacheError when a present file cannot
/// be read.
std::optional<CensusRecord> cache_load(const std::filesystem::path& dir, int order);

}  // namespace lapspec

#endif  // LAPSPEC_CACHE_HPP
