#pragma once

#include "hvx/core.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hvx
{

enum class BenchSuite
{
    hv,
    contrib,
    hssp
};

BenchSuite parse_bench_suite(const std::string& name);

struct BenchRecord
{
    std::string algorithm_id;
    Index d = 0;
    Index n = 0;
    Index k = -1; ///< -1 when the suite has no k
    std::int64_t wall_time_ns = 0;
    double value = 0;
    std::uint64_t seed = 0;
    std::string git_describe;
};

struct BenchOptions
{
    BenchSuite suite = BenchSuite::hv;
    std::vector<Index> sizes;
    std::vector<Index> dims;
    int reps = 1;
    std::uint64_t seed = 1;
};

/// One untimed warm-up per (size, dim), then `reps` timed calls on fresh
/// spherical fronts. Only the core call sits inside the timer.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

std::string git_describe();

} // namespace hvx
