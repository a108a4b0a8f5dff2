#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "stacklab/genfun.hpp"
#include "stacklab/series.hpp"

namespace stacklab::cli {

// $STACKLAB_CACHE, else $XDG_CACHE_HOME/stacklab, else $HOME/.cache/stacklab.
std::optional<std::filesystem::path> default_cache_dir();

// One file per variant, <dir>/<variant>.json, holding the highest order computed so far.
// Unreadable or corrupt entries are recomputed; failed writes only produce a warning.
class SeriesCache {
 public:
  SeriesCache(std::optional<std::filesystem::path> dir, bool force_recompute, std::ostream& warnings);

  PowerSeries get(Variant v, std::size_t order);

  std::filesystem::path entry_path(Variant v) const;

 private:
  std::optional<PowerSeries> read(Variant v) const;
  void write(Variant v, const PowerSeries& s);

  std::optional<std::filesystem::path> dir_;
  bool force_recompute_;
  std::ostream& warnings_;
};

}  // namespace stacklab::cli
