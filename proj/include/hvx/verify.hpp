#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hvx
{

struct VerifyOptions
{
    int instances = 100; ///< random instances per property
    std::uint64_t seed = 1;
    bool inject_fault = false; ///< perturb one fast path, for testing the harness itself
};

struct PropertyResult
{
    std::string name;
    int checked = 0;
    int failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0; }
};

/// Randomized cross-checks of every module against the oracles.
std::vector<PropertyResult> run_verification(const VerifyOptions& options);

void print_verification(std::ostream& out, const std::vector<PropertyResult>& results);

} // namespace hvx
