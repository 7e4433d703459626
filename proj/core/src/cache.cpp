#include "wg/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include <unistd.h>

namespace wg::cache {
namespace {

std::mutex g_mutex;
std::string g_dir;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::string dir() {
    std::lock_guard lock(g_mutex);
    if (!g_dir.empty()) return g_dir;
    if (const char* env = std::getenv("WG_CACHE_DIR"); env && *env) return env;
    return ".wg-cache";
}

void set_dir(const std::string& d) {
    std::lock_guard lock(g_mutex);
    g_dir = d;
}

std::optional<nlohmann::json> load(const std::string& filename, const std::string& version) {
    std::filesystem::path path = std::filesystem::path(dir()) / filename;
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (!doc.contains("generator") || !doc.contains("hash") || !doc.contains("entries"))
        return std::nullopt;
    if (doc["generator"] != version) return std::nullopt;
    if (doc["hash"] != std::to_string(fnv1a(version))) return std::nullopt;
    return doc["entries"];
}

void store(const std::string& filename, const std::string& version,
           const nlohmann::json& entries) {
    try {
        std::filesystem::path d(dir());
        std::filesystem::create_directories(d);
        nlohmann::json doc;
        doc["generator"] = version;
        doc["hash"] = std::to_string(fnv1a(version));
        doc["entries"] = entries;
        // writer-unique temp so concurrent builders of identical content
        // race only on the atomic rename
        std::filesystem::path tmp = d / (filename + ".tmp." + std::to_string(getpid()));
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << doc.dump();
        }
        std::filesystem::rename(tmp, d / filename);
    } catch (...) {
        // cache writes must never fail the computation
    }
}

}  // namespace wg::cache
