#include "dedekind/cache.hpp"

#include "dedekind/error.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>

namespace dedekind {

namespace {

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw Error("cannot open cache lock " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw Error("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

nlohmann::json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return nlohmann::json::object();
  auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return nlohmann::json::object();
  return j;
}

std::filesystem::path lock_path(const std::filesystem::path& path) {
  auto p = path;
  p += ".lock";
  return p;
}

}  // namespace

ReportCache::ReportCache(std::filesystem::path path, std::string engine_version)
    : path_(std::move(path)), engine_(std::move(engine_version)) {}

std::filesystem::path ReportCache::default_path() {
  if (const char* env = std::getenv("DEDEKIND_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::filesystem::path(xdg) / "dedekind" / "cache.json";
  if (const char* home = std::getenv("HOME")) return std::filesystem::path(home) / ".cache" / "dedekind" / "cache.json";
  return "dedekind-cache.json";
}

std::optional<InvariantReport> ReportCache::load(const std::string& spec, bool need_d_star) const {
  if (!std::filesystem::exists(path_)) return std::nullopt;
  FileLock lock(lock_path(path_));
  const auto j = read_file(path_);
  if (!j.contains("entries")) return std::nullopt;
  const auto& entries = j["entries"];
  auto it = entries.find(spec);
  if (it == entries.end() || !it->is_object()) return std::nullopt;
  if (it->value("engine", "") != engine_) return std::nullopt;
  try {
    auto report = InvariantReport::from_json(it->at("report"));
    if (need_d_star && !report.d_star) return std::nullopt;
    return report;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const InvariantReport& report) const {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  FileLock lock(lock_path(path_));
  auto j = read_file(path_);
  if (!j.contains("entries") || !j["entries"].is_object()) j["entries"] = nlohmann::json::object();
  auto saved = report;
  saved.ms.reset();
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  j["entries"][report.spec] = {{"engine", engine_},
                               {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                               {"report", saved.to_json()}};
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache " + tmp.string());
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace dedekind
