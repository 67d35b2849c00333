#ifndef MACQK_CACHE_HPP
#define MACQK_CACHE_HPP

/// @file cache.hpp
/// @brief On-disk cache for transition matrices and Macdonald coefficient
/// tables. One file per (table kind, degree); each payload carries a schema
/// version and a content hash, and a file that fails either check is rebuilt
/// rather than reused.

#include <cstdint>
#include <optional>
#include <string>

namespace macqk {

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(const std::string& data);

class DiskCache {
public:
    static DiskCache& instance();

    /// Empty string disables the cache. The directory is created on first
    /// store. Resolution order used by callers: explicit flag, then the
    /// MACQK_CACHE_DIR environment variable, then disabled.
    void set_directory(const std::string& dir);
    const std::string& directory() const { return dir_; }
    bool enabled() const { return !dir_.empty(); }

    /// Applies the environment fallback if no directory was set explicitly.
    void configure_from_environment();

    /// Returns the payload for `key`, or nullopt on miss, version skew, or a
    /// content hash mismatch (corrupt files are never reused).
    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

    struct Status {
        int files = 0;
        long long bytes = 0;
    };
    Status status() const;

private:
    DiskCache() = default;
    std::string path_for(const std::string& key) const;

    std::string dir_;
};

}  // namespace macqk

#endif
