#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dp5/constants.hpp"

namespace dp5 {

struct VerifyConfig {
    std::vector<std::string> suites;  // empty runs everything
    std::uint64_t count_bound = 500;
    std::uint64_t mc_samples = 10'000'000;
    std::uint64_t gcd_samples = 10'000;
    double quad_tol = 1e-4;
    unsigned threads = 1;
    std::uint64_t seed = 20240229;
    std::string golden_dir;
    // replaced by test fixtures to inject faults
    LocalFactor local_factor = [](std::uint64_t p) { return euler_local_factor(p); };
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// counts, ff, padic, gcd, alpha, density, golden
const std::vector<std::string>& verify_suite_names();

// Runs the selected suites; writes one table line per check to `log` if given.
std::vector<CheckResult> run_verify(const VerifyConfig& cfg, std::ostream* log = nullptr);

// Built-in golden files, relative to the golden directory.
constexpr const char* kGoldenSeries = "series_p1.csv";
constexpr const char* kGoldenConstants = "constants.json";

// Reads `B,count,...` rows from a golden series CSV.
std::vector<std::pair<std::uint64_t, std::uint64_t>> read_golden_series(const std::string& path);

}  // namespace dp5
