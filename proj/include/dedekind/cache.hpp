#pragma once

#include "dedekind/invariants.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace dedekind {

// Invariant reports persisted in one JSON file:
//   {"entries": {"<spec>": {"engine": ..., "timestamp": ..., "report": {...}}}}
// Every access holds an exclusive flock on "<path>.lock". A corrupt file is
// treated as empty and rewritten on the next store.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path path, std::string engine_version);

  // A hit needs a matching engine version, and a d* value if `need_d_star`.
  std::optional<InvariantReport> load(const std::string& spec, bool need_d_star) const;
  void store(const InvariantReport& report) const;

  const std::filesystem::path& path() const { return path_; }
  static std::filesystem::path default_path();

 private:
  std::filesystem::path path_;
  std::string engine_;
};

}  // namespace dedekind
