#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace wg::cache {

/// Cache directory resolution: explicit set_dir() wins, then the
/// WG_CACHE_DIR environment variable, then ".wg-cache".
std::string dir();
void set_dir(const std::string& d);

/// Load a cached table; nullopt on missing file, parse failure, or
/// generator version mismatch (stale tables are recomputed, never trusted).
std::optional<nlohmann::json> load(const std::string& filename, const std::string& version);

/// Best-effort store (temp file + rename, so concurrent writers of
/// identical content race benignly). Failures are silent: the cache is
/// an accelerator, not a dependency.
void store(const std::string& filename, const std::string& version,
           const nlohmann::json& entries);

}  // namespace wg::cache
