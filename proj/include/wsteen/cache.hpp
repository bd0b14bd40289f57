#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace wsteen {

/* Content-addressed on-disk result cache.  Keys carry the artifact and
 * monomial-order versions so stale entries never match.  Writes go through
 * a temp file + rename; concurrent readers are safe. */
class ResultCache {
public:
    explicit ResultCache(std::string dir);  // empty = disabled

    bool enabled() const { return !dir_.empty(); }
    std::optional<nlohmann::ordered_json> get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::ordered_json& value) const;

    static std::string default_dir();  // $WSTEEN_CACHE or ".wsteen-cache"

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

}  // namespace wsteen
