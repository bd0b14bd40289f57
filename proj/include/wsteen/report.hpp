#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wsteen {

constexpr int kSchemaVersion = 1;
constexpr const char* kArtifactVersion = "1.0.0";
constexpr int kMonomialOrderVersion = 1;

struct CheckRecord {
    std::string name;
    bool passed = false;
    nlohmann::ordered_json details;  // may be null
};

struct VerificationReport {
    std::string suite;
    std::string field;
    nlohmann::ordered_json params;
    std::vector<CheckRecord> entries;
    long long timing_ms = 0;

    bool all_passed() const;
    void add(std::string name, bool passed, nlohmann::ordered_json details = nullptr);
    nlohmann::ordered_json to_json(bool with_timing = true) const;
    std::string table() const;
};

}  // namespace wsteen
