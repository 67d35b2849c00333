#include "macqk/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace macqk {

namespace {

// Bump when the canonical coefficient string form changes: stale files must
// miss, not parse into the new arithmetic.
constexpr const char* kSchemaVersion = "macqk-cache-v1";

}  // namespace

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

DiskCache& DiskCache::instance() {
    static DiskCache cache;
    return cache;
}

void DiskCache::set_directory(const std::string& dir) { dir_ = dir; }

void DiskCache::configure_from_environment() {
    if (!dir_.empty()) return;
    if (const char* env = std::getenv("MACQK_CACHE_DIR")) dir_ = env;
}

std::string DiskCache::path_for(const std::string& key) const {
    std::string name;
    name.reserve(key.size());
    for (char c : key) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                  c == '-' || c == '.';
        name += ok ? c : '_';
    }
    return dir_ + "/" + name + ".json";
}

std::optional<std::string> DiskCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::istringstream hs(header);
    std::string version, hash_field;
    hs >> version >> hash_field;
    if (version != kSchemaVersion || hash_field.rfind("fnv1a=", 0) != 0) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    std::string payload = body.str();
    std::ostringstream expect;
    expect << "fnv1a=" << std::hex << fnv1a64(payload);
    if (hash_field != expect.str()) return std::nullopt;
    return payload;
}

void DiskCache::store(const std::string& key, const std::string& payload) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::string path = path_for(key);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << kSchemaVersion << " fnv1a=" << std::hex << fnv1a64(payload) << '\n' << payload;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

DiskCache::Status DiskCache::status() const {
    Status s;
    if (!enabled()) return s;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".json") continue;
        ++s.files;
        s.bytes += static_cast<long long>(entry.file_size(ec));
    }
    return s;
}

}  // namespace macqk
