#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "floorcount/bigint.hpp"
#include "floorcount/json_io.hpp"

namespace floorcount {

inline constexpr const char* tool_version = "0.1.0";

struct CacheKey {
    int degree = 0;
    int genus = 0;
    std::string kind;    // "complex" | "real"
    std::string method;  // "diagrams" | "kontsevich" | "formula"
};

// One JSON file per key under the cache directory. Values travel as
// decimal strings; corrupted entries are ignored with a warning and the
// caller recomputes. Writes go through a temporary file and a rename.
class ResultCache {
public:
    ResultCache() = default;

    explicit ResultCache(const std::filesystem::path& directory) {
        std::error_code ec;
        std::filesystem::create_directories(directory, ec);
        if (ec) {
            std::cerr << "warning: cache directory " << directory
                      << " is not usable (" << ec.message()
                      << "), caching disabled\n";
            return;
        }
        directory_ = directory;
        enabled_ = true;
    }

    bool enabled() const { return enabled_; }

    std::optional<BigInt> load(const CacheKey& key) const {
        if (!enabled_) return std::nullopt;
        const std::filesystem::path path = entry_path(key);
        std::ifstream in(path);
        if (!in) return std::nullopt;
        try {
            const Json content = Json::parse(in);
            const Json& stored = detail::field(content, "key", "cache entry");
            if (detail::int_field(stored, "degree", "cache key") != key.degree ||
                detail::int_field(stored, "genus", "cache key") != key.genus ||
                detail::string_field(stored, "kind", "cache key") != key.kind ||
                detail::string_field(stored, "method", "cache key") != key.method)
                throw std::invalid_argument("cache entry: key mismatch");
            return BigInt(detail::string_field(content, "value", "cache entry"));
        } catch (const std::exception& error) {
            std::cerr << "warning: ignoring corrupted cache entry " << path << " ("
                      << error.what() << ")\n";
            return std::nullopt;
        }
    }

    void store(const CacheKey& key, const BigInt& value) {
        if (!enabled_) return;
        const Json content = {{"key",
                               {{"degree", key.degree},
                                {"genus", key.genus},
                                {"kind", key.kind},
                                {"method", key.method}}},
                              {"value", value.str()},
                              {"tool_version", tool_version}};
        const std::filesystem::path path = entry_path(key);
        const std::filesystem::path temp = path.string() + ".tmp";
        {
            std::ofstream out(temp);
            if (!out) {
                std::cerr << "warning: cache directory " << directory_
                          << " is not writable, caching disabled\n";
                enabled_ = false;
                return;
            }
            out << content.dump(2) << '\n';
        }
        std::error_code ec;
        std::filesystem::rename(temp, path, ec);
        if (ec) {
            std::cerr << "warning: could not finalize cache entry " << path << " ("
                      << ec.message() << ")\n";
            std::filesystem::remove(temp, ec);
        }
    }

private:
    std::filesystem::path entry_path(const CacheKey& key) const {
        return directory_ / ("count_" + key.kind + "_d" + std::to_string(key.degree) +
                             "_g" + std::to_string(key.genus) + "_" + key.method +
                             ".json");
    }

    std::filesystem::path directory_;
    bool enabled_ = false;
};

}  // namespace floorcount
