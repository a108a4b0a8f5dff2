#include "stacklab_cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>
#include <unistd.h>

namespace stacklab::cli {

namespace fs = std::filesystem;

std::optional<fs::path> default_cache_dir() {
  if (const char* dir = std::getenv("STACKLAB_CACHE"); dir != nullptr && *dir != '\0') return fs::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "stacklab";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "stacklab";
  }
  return std::nullopt;
}

SeriesCache::SeriesCache(std::optional<fs::path> dir, bool force_recompute, std::ostream& warnings)
    : dir_(std::move(dir)), force_recompute_(force_recompute), warnings_(warnings) {}

fs::path SeriesCache::entry_path(Variant v) const {
  return *dir_ / (std::string(variant_name(v)) + ".json");
}

std::optional<PowerSeries> SeriesCache::read(Variant v) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(entry_path(v));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("variant").get<std::string>() != variant_name(v)) return std::nullopt;
    return power_series_from_json(j.at("series"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void SeriesCache::write(Variant v, const PowerSeries& s) {
  if (!dir_) return;
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  if (ec) {
    warnings_ << "warning: cannot create cache directory " << *dir_ << ": " << ec.message() << '\n';
    return;
  }
  const fs::path target = entry_path(v);
  const fs::path temp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << nlohmann::json{{"variant", variant_name(v)}, {"series", to_json(s)}}.dump() << '\n';
    if (!out) {
      warnings_ << "warning: cannot write cache entry " << temp << '\n';
      fs::remove(temp, ec);
      return;
    }
  }
  fs::rename(temp, target, ec);
  if (ec) {
    warnings_ << "warning: cannot replace cache entry " << target << ": " << ec.message() << '\n';
    fs::remove(temp, ec);
  }
}

PowerSeries SeriesCache::get(Variant v, std::size_t order) {
  std::optional<PowerSeries> cached = read(v);
  if (!force_recompute_ && cached && cached->order() >= order) {
    return cached->order() == order ? std::move(*cached) : cached->truncated(order);
  }
  PowerSeries fresh = series(v, order);
  // never replace a longer entry with a shorter one
  if (!cached || cached->order() <= order) write(v, fresh);
  return fresh;
}

}  // namespace stacklab::cli
