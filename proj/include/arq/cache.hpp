#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

namespace arq {

inline constexpr const char* kArtifactVersion = "1";

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Tiny content-addressed JSON cache; entries are revalidated against a
// stored hash before reuse and silently dropped when stale.
class FileCache {
public:
    explicit FileCache(std::string dir) : dir_(std::move(dir)) {}

    static std::optional<FileCache> from_env() {
        const char* dir = std::getenv("ARQ_CACHE_DIR");
        if (!dir || !*dir) return std::nullopt;
        return FileCache(dir);
    }

    std::optional<nlohmann::json> load(const std::string& key) const {
        std::ifstream in(path_for(key));
        if (!in.good()) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
        } catch (...) {
            return std::nullopt;
        }
        if (!j.contains("payload") || !j.contains("hash")) return std::nullopt;
        if (fnv1a_hex(j["payload"].dump()) != j["hash"].get<std::string>()) return std::nullopt;
        if (j.value("version", "") != kArtifactVersion) return std::nullopt;
        return j["payload"];
    }

    void store(const std::string& key, const nlohmann::json& payload) const {
        std::filesystem::create_directories(dir_);
        nlohmann::json j;
        j["version"] = kArtifactVersion;
        j["payload"] = payload;
        j["hash"] = fnv1a_hex(payload.dump());
        std::ofstream out(path_for(key));
        out << j.dump(1) << "\n";
    }

private:
    std::string path_for(const std::string& key) const {
        std::string safe;
        for (char c : key) safe += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
        return dir_ + "/" + safe + ".json";
    }

    std::string dir_;
};

} // namespace arq
