#include "hvx/bench.hpp"

#include "hvx/generators.hpp"
#include "hvx/hvx.hpp"
#include "hvx/io.hpp"

#include <chrono>

#ifndef HVX_GIT_DESCRIBE
#define HVX_GIT_DESCRIBE "unknown"
#endif

namespace hvx
{

BenchSuite parse_bench_suite(const std::string& name)
{
    if (name == "hv")
        return BenchSuite::hv;
    if (name == "contrib")
        return BenchSuite::contrib;
    if (name == "hssp")
        return BenchSuite::hssp;
    throw InvalidInput("unknown bench suite '" + name + "'");
}

std::string git_describe() { return HVX_GIT_DESCRIBE; }

namespace
{

struct Timed
{
    double value;
    std::int64_t ns;
};

template <typename Fn>
Timed timed(Fn&& fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    const double v = fn();
    const auto t1 = std::chrono::steady_clock::now();
    return {v, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()};
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt)
{
    std::vector<BenchRecord> records;
    for (Index d : opt.dims)
        for (Index n : opt.sizes)
        {
            const Index k = opt.suite == BenchSuite::hssp ? std::max<Index>(1, n / 2) : -1;
            const ReferencePoint ref(Point::Constant(d, 1.1));
            const auto core = [&](const Front& s) -> double {
                switch (opt.suite)
                {
                case BenchSuite::hv: return hv(s, ref).value;
                case BenchSuite::contrib: return all_contributions(s, ref).total_hv;
                case BenchSuite::hssp: return hssp_greedy_incremental(s, ref, k).hypervolume;
                }
                return 0;
            };
            std::string algorithm;
            switch (opt.suite)
            {
            case BenchSuite::hv: algorithm = to_string(detail::dispatch_algorithm(d)); break;
            case BenchSuite::contrib: algorithm = "contrib-" + std::string(d <= 3 ? std::to_string(d) + "d" : "generic"); break;
            case BenchSuite::hssp: algorithm = "greedy-inc"; break;
            }

            (void)core(generate_front(FrontKind::spherical, n, d, opt.seed));
            for (int rep = 0; rep < opt.reps; ++rep)
            {
                const std::uint64_t seed = opt.seed + std::uint64_t(rep) + 1;
                const Front s = generate_front(FrontKind::spherical, n, d, seed);
                const auto t = timed([&] { return core(s); });
                records.push_back({algorithm, d, n, k, t.ns, t.value, seed, git_describe()});
            }
        }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records)
{
    out << "algorithm_id,d,n,k,wall_time_ns,value,seed,git_describe\n";
    for (const auto& r : records)
    {
        out << r.algorithm_id << ',' << r.d << ',' << r.n << ',';
        if (r.k >= 0)
            out << r.k;
        out << ',' << r.wall_time_ns << ',' << format_value(r.value) << ',' << r.seed << ',' << r.git_describe
            << '\n';
    }
}

} // namespace hvx
