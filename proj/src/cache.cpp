#include "wsteen/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "wsteen/report.hpp"

namespace wsteen {

namespace {
std::string fnv1a_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}
}  // namespace

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::default_dir() {
    if (const char* env = std::getenv("WSTEEN_CACHE")) return env;
    return ".wsteen-cache";
}

std::string ResultCache::path_for(const std::string& key) const {
    return dir_ + "/" + fnv1a_hex(key) + ".json";
}

std::optional<nlohmann::ordered_json> ResultCache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("key", "") != key) return std::nullopt;  // hash collision guard
    if (!j.contains("value")) return std::nullopt;
    return j["value"];
}

void ResultCache::put(const std::string& key, const nlohmann::ordered_json& value) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    nlohmann::ordered_json j;
    j["key"] = key;
    j["value"] = value;
    std::string final_path = path_for(key);
    std::string tmp = final_path + ".tmp" + std::to_string(static_cast<unsigned>(getpid()));
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace wsteen
