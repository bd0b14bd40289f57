#include "wsteen/report.hpp"

#include <sstream>

namespace wsteen {

bool VerificationReport::all_passed() const {
    for (const auto& e : entries)
        if (!e.passed) return false;
    return true;
}

void VerificationReport::add(std::string name, bool passed, nlohmann::ordered_json details) {
    entries.push_back({std::move(name), passed, std::move(details)});
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["artifact_version"] = kArtifactVersion;
    j["suite"] = suite;
    j["field"] = field;
    j["params"] = params.is_null() ? nlohmann::ordered_json::object() : params;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["passed"] = e.passed;
        if (!e.details.is_null()) je["details"] = e.details;
        arr.push_back(je);
    }
    j["entries"] = arr;
    j["all_passed"] = all_passed();
    if (with_timing) j["timing_ms"] = timing_ms;
    return j;
}

std::string VerificationReport::table() const {
    std::ostringstream os;
    os << "suite " << suite << " (field " << field << ")\n";
    int failed = 0;
    for (const auto& e : entries) {
        if (!e.passed) {
            ++failed;
            os << "  FAIL  " << e.name;
            if (!e.details.is_null()) os << "  " << e.details.dump();
            os << "\n";
        }
    }
    os << "  " << entries.size() - failed << "/" << entries.size() << " checks passed";
    if (failed) os << ", " << failed << " FAILED";
    os << " (" << timing_ms << " ms)\n";
    return os.str();
}

}  // namespace wsteen
