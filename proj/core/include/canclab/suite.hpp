#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canclab/complex.hpp"

namespace canclab {

struct SuiteResult {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::vector<std::string> failure_details;  // first few failures
    bool ok() const { return failures == 0; }

    void fail(const std::string& detail) {
        ++failures;
        if (failure_details.size() < 8) failure_details.push_back(detail);
    }
};

/// The fixed desk-scale complex corpus shared by the property suites.
std::vector<std::pair<std::string, TwoComplex>> standard_corpus();

// Property suites over generated corpora with fixed seeds.
SuiteResult suite_gauss_bonnet(std::uint64_t seed, int count = 10000);
SuiteResult suite_singular(std::uint64_t seed, int count = 10000);
SuiteResult suite_prop_quad(std::uint64_t seed, int count = 1000);
SuiteResult suite_dlwc(int max_len = 6);
SuiteResult suite_sng(std::uint64_t seed, int count = 2000);
SuiteResult suite_helly();
SuiteResult suite_torsion();

const std::vector<std::string>& suite_names();
/// Runs a named suite; throws Error for unknown names.
SuiteResult run_suite(std::string_view name, std::uint64_t seed);

}  // namespace canclab
