#ifndef QKGR_SUITES_HPP
#define QKGR_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkgr/localization.hpp"

namespace qkgr {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct SuiteOptions {
    std::optional<int> n, N, D, level;
    std::vector<BigRat> lambdas;  // recursion-suite override (perfect powers)
    std::uint64_t seed = 20200818;
    int precision = 50;
    int jobs = 1;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
};

// pairing, gamma, recursion, nonabelian, operators, dongwen, poles, diffeq,
// jackson, mirror — "all" runs everything.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<SuiteResult> run_suites(const std::string& name_or_all, const SuiteOptions& opt);

std::string report_to_json(const std::string& command, const SuiteOptions& opt,
                           const std::vector<SuiteResult>& results,
                           std::optional<double> wall_ms = std::nullopt);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace qkgr

#endif
