#pragma once

// Content-addressed result cache for dimension computations.  Entries are
// JSON files named by the 64-bit FNV-1a hash of the full key text; the key
// is stored inside the entry and compared on lookup, so hash collisions
// and corrupt files are detected and evicted rather than trusted.  Writes
// go through a temp file plus rename under an advisory lock, so concurrent
// invocations cannot corrupt entries.  Any I/O failure degrades to
// cache-off operation with a warning on stderr.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#ifdef __unix__
#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>
#endif

namespace jetcalc {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string content_hash_hex(std::string_view s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

class ResultCache {
public:
    ResultCache() = default;

    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) {
            warn("cannot create cache directory " + dir_.string() + ": " + ec.message());
            return;
        }
        enabled_ = true;
    }

    bool enabled() const { return enabled_; }
    const std::filesystem::path& directory() const { return dir_; }

    std::optional<nlohmann::ordered_json> lookup(const std::string& key) {
        if (!enabled_) return std::nullopt;
        std::filesystem::path path = entry_path(key);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        Lock lock(dir_, *this);
        try {
            nlohmann::ordered_json entry = nlohmann::ordered_json::parse(in);
            if (!entry.contains("key") || !entry.contains("value") ||
                entry["key"].get<std::string>() != key) {
                evict(path);
                return std::nullopt;
            }
            return entry["value"];
        } catch (const nlohmann::json::exception&) {
            evict(path);
            return std::nullopt;
        }
    }

    void store(const std::string& key, const nlohmann::ordered_json& value) {
        if (!enabled_) return;
        nlohmann::ordered_json entry;
        entry["key"] = key;
        entry["value"] = value;
        std::filesystem::path path = entry_path(key);
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        Lock lock(dir_, *this);
        try {
            {
                std::ofstream out(tmp);
                if (!out) throw std::runtime_error("cannot open " + tmp.string());
                out << entry.dump(2) << "\n";
            }
            std::filesystem::rename(tmp, path);
        } catch (const std::exception& e) {
            warn(std::string("cache store failed: ") + e.what());
            enabled_ = false;
        }
    }

private:
    struct Lock {
#ifdef __unix__
        int fd = -1;
        Lock(const std::filesystem::path& dir, ResultCache&) {
            fd = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
            if (fd >= 0) ::flock(fd, LOCK_EX);
        }
        ~Lock() {
            if (fd >= 0) {
                ::flock(fd, LOCK_UN);
                ::close(fd);
            }
        }
#else
        Lock(const std::filesystem::path&, ResultCache&) {}
#endif
    };

    std::filesystem::path entry_path(const std::string& key) const {
        return dir_ / (content_hash_hex(key) + ".json");
    }

    void evict(const std::filesystem::path& path) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }

    void warn(const std::string& msg) {
        std::fprintf(stderr, "jetcalc: warning: %s (continuing without cache)\n",
                     msg.c_str());
    }

    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace jetcalc
