#pragma once

#include "sgm/catalog.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace sgm {

inline constexpr const char* kToolVersion = "sgm 0.1.0";

// Persistent catalog cache: one JSON file per (g, n) carrying a content hash
// and the tool version. A hash or version mismatch invalidates the entry.
// Writes go through a temp file and an atomic rename.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(int g, int n) const;

    std::optional<GraphCatalog> load(int g, int n) const;
    void store(const GraphCatalog& catalog) const;

    // Wire the cache into a store's compute path.
    void attach(CatalogStore& target) const;

private:
    std::filesystem::path dir_;
};

// SGM_CACHE_DIR when set, otherwise XDG_CACHE_HOME/sgm or ~/.cache/sgm.
std::filesystem::path default_cache_dir();

// FNV-1a 64-bit, rendered as 16 hex digits; integrity check, not crypto.
std::string content_hash(const std::string& payload);

}  // namespace sgm
