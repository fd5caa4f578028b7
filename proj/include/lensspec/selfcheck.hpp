#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lensspec/bigint.hpp"
#include "lensspec/counting.hpp"

namespace lensspec {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;
    std::string detail;  // first failure, if any
};

struct VerifyConfig {
    int n = 3;
    int k_max = 6;
    int q_max = 7;
    int order = 20;
};

/// Right-hand side of the shell/reduced-count convolution: N(a q + r, l) rebuilt
/// from the reduced table (q = reduced.modulus).
BigInt reduced_convolution(const ReducedTable& reduced, int a, int r, int ell);

/// Runs the cross-checks between the closed formulas, the brute-force oracle,
/// the rational generating functions and the counting kernels.
std::vector<CheckResult> run_self_checks(const VerifyConfig& config);

}  // namespace lensspec
