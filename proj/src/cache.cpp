#include "sgm/cache.hpp"

#include "sgm/json_io.hpp"

#include <cstdlib>
#include <fstream>

namespace sgm {

std::string content_hash(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskCache::entry_path(int g, int n) const {
    return dir_ / ("catalog_" + std::to_string(g) + "_" + std::to_string(n) + ".json");
}

std::optional<GraphCatalog> DiskCache::load(int g, int n) const {
    const auto path = entry_path(g, n);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("tool_version").get<std::string>() != kToolVersion) return std::nullopt;
        const std::string payload = j.at("payload").dump();
        if (j.at("hash").get<std::string>() != content_hash(payload)) return std::nullopt;
        return catalog_from_json(g, n, j.at("payload"));
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are treated as misses
    }
}

void DiskCache::store(const GraphCatalog& catalog) const {
    const nlohmann::json payload = catalog_to_json(catalog);
    nlohmann::json j = {{"tool_version", kToolVersion},
                        {"g", catalog.genus()},
                        {"n", catalog.ext()},
                        {"payload", payload},
                        {"hash", content_hash(payload.dump())}};
    const auto path = entry_path(catalog.genus(), catalog.ext());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp);
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

void DiskCache::attach(CatalogStore& target) const {
    target.set_hooks([this](int g, int n) { return load(g, n); },
                     [this](const GraphCatalog& cat) { store(cat); });
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SGM_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "sgm";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "sgm";
    return std::filesystem::temp_directory_path() / "sgm-cache";
}

}  // namespace sgm
