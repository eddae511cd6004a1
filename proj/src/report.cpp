#include "cmposet/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "cmposet/version.hpp"

namespace cmposet {

void SuiteConfig::validate() const {
    if (budget == 0) throw std::invalid_argument("budget must be positive");
    if (workers == 0) throw std::invalid_argument("workers must be positive");
    if (genus < 0) throw std::invalid_argument("genus must be non-negative");
}

VerdictStatus VerificationReport::overall() const {
    VerdictStatus s = VerdictStatus::verified;
    for (const auto& c : claims) s = combine(s, c.verdict);
    return s;
}

std::size_t VerificationReport::count(VerdictStatus s) const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.verdict == s;
    return n;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["version"] = library_version;
#if defined(__clang__)
    j["toolchain"] = "clang " __clang_version__;
#elif defined(__GNUC__)
    j["toolchain"] = "gcc " __VERSION__;
#else
    j["toolchain"] = "unknown";
#endif
    j["config"] = {{"ring", config.ring.name()},
                   {"genus", config.genus},
                   {"budget", config.budget},
                   {"workers", config.workers},
                   {"seed", config.seed}};
    j["overall"] = to_string(overall());
    j["summary"] = {{"verified", count(VerdictStatus::verified)},
                    {"refuted", count(VerdictStatus::refuted)},
                    {"inconclusive", count(VerdictStatus::inconclusive)}};
    auto& records = j["claims"] = nlohmann::json::array();
    for (const auto& c : claims) {
        nlohmann::json r{{"id", c.id},
                         {"anchor", c.anchor},
                         {"verdict", to_string(c.verdict)},
                         {"basis", to_string(c.basis)},
                         {"counts", c.counts}};
        if (!c.detail.empty()) r["detail"] = c.detail;
        records.push_back(std::move(r));
    }
    return j;
}

nlohmann::json VerificationReport::timings_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& c : claims) j[c.id] = c.seconds;
    return j;
}

int exit_code(VerdictStatus overall) {
    switch (overall) {
        case VerdictStatus::verified: return 0;
        case VerdictStatus::refuted: return 1;
        case VerdictStatus::inconclusive: return 2;
    }
    return 2;
}

std::string write_report(const VerificationReport& r, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto main = fs::path(dir) / (r.suite + ".json");
    const auto side = fs::path(dir) / (r.suite + ".timings.json");
    std::ofstream(main) << r.to_json().dump(2) << '\n';
    std::ofstream(side) << r.timings_json().dump(2) << '\n';
    if (!fs::exists(main)) throw std::runtime_error("could not write " + main.string());
    return main.string();
}

}  // namespace cmposet
