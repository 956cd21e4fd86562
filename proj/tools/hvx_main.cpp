#include "hvx/bench.hpp"
#include "hvx/generators.hpp"
#include "hvx/hvx.hpp"
#include "hvx/io.hpp"
#include "hvx/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace
{

using namespace hvx;

enum Exit
{
    ok = 0,
    failure = 1,
    parse_error = 2,
    dimension_error = 3,
    index_error = 4,
    method_error = 5,
    generation_error = 6,
    verify_error = 10
};

struct Fail
{
    int code;
    std::string message;
};

std::vector<Front> load(const std::string& path, const ReferencePoint& ref)
{
    auto fronts = read_fronts_file(path, ref.dim());
    for (const auto& f : fronts)
        if (f.dim() != ref.dim())
            throw Fail{dimension_error, "front has " + std::to_string(f.dim()) + " objectives, reference point has " +
                                            std::to_string(ref.dim())};
    return fronts;
}

double run_hv(const Front& s, const ReferencePoint& r, const std::string& algorithm)
{
    if (algorithm == "auto")
        return hv(s, r).value;
    if (algorithm == "2d")
        return hv_2d(s, r).value;
    if (algorithm == "3d")
        return hv_3d(s, r).value;
    if (algorithm == "4d")
        return hv_4d(s, r).value;
    if (algorithm == "wfg")
        return hv_wfg(s, r).value;
    if (algorithm == "hso")
        return hv_hso(s, r);
    if (algorithm == "ie")
        return hv_inclusion_exclusion(s, r);
    return hv_grid(s, r);
}

HsspSolution run_hssp(const Front& s, const ReferencePoint& r, Index k, const std::string& method,
                      std::uint64_t seed, std::optional<Index> iters, Index swaps)
{
    if (method == "exact2d")
    {
        if (s.dim() != 2)
            throw Fail{method_error, "exact2d needs a two-objective front"};
        return hssp_exact_2d(s, r, k);
    }
    if (method == "exhaustive")
        return hssp_exhaustive(s, r, k);
    if (method == "greedy-inc")
        return hssp_greedy_incremental(s, r, k);
    if (method == "greedy-dec")
        return hssp_greedy_decremental(s, r, k);
    if (method == "ls")
        return hssp_local_search(s, r, k, swaps, iters.value_or(1000), seed);
    return hssp_gsemo(s, r, k, iters.value_or(gsemo_default_iterations(s.size(), k)), seed);
}

std::vector<Index> parse_list(const std::string& text)
{
    std::vector<Index> out;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        std::size_t used = 0;
        long long v = 0;
        try
        {
            v = std::stoll(token, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used != token.size() || token.empty() || v <= 0)
            throw ParseError("bad list entry '" + token + "'", 0);
        out.push_back(Index(v));
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact hypervolume, contributions and subset selection"};
    app.require_subcommand(1);

    std::string file, ref_text, algorithm = "auto", method, kind = "random", out_path, suite = "hv";
    std::string sizes_text = "100,1000", dims_text = "3";
    Index point = -1, k = 0, n = 10, d = 2, swaps = 1;
    bool all = false, least = false, report_ratio = false, inject_fault = false;
    std::uint64_t seed = 1;
    std::optional<Index> iters;
    int budget = 100, reps = 3;

    auto* hv_cmd = app.add_subcommand("hv", "hypervolume of each front in a file");
    hv_cmd->add_option("file", file)->required();
    hv_cmd->add_option("--ref", ref_text)->required();
    hv_cmd->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"auto", "2d", "3d", "4d", "wfg", "hso", "ie", "grid"}));

    auto* contrib_cmd = app.add_subcommand("contrib", "hypervolume contributions");
    contrib_cmd->add_option("file", file)->required();
    contrib_cmd->add_option("--ref", ref_text)->required();
    auto* point_opt = contrib_cmd->add_option("--point", point, "contribution of one point");
    auto* all_opt = contrib_cmd->add_flag("--all", all, "contribution of every point (default)");
    auto* least_opt = contrib_cmd->add_flag("--least", least, "least contributor as 'index value'");
    point_opt->excludes(all_opt)->excludes(least_opt);
    all_opt->excludes(least_opt);

    auto* hssp_cmd = app.add_subcommand("hssp", "hypervolume subset selection");
    hssp_cmd->add_option("file", file)->required();
    hssp_cmd->add_option("--ref", ref_text)->required();
    hssp_cmd->add_option("-k", k)->required();
    hssp_cmd->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"exact2d", "exhaustive", "greedy-inc", "greedy-dec", "ls", "gsemo"}));
    hssp_cmd->add_option("--seed", seed);
    hssp_cmd->add_option("--iters", iters);
    hssp_cmd->add_option("--swaps", swaps, "local search swaps per move");
    hssp_cmd->add_flag("--report-ratio", report_ratio);

    auto* gen_cmd = app.add_subcommand("gen", "generate a nondominated front");
    gen_cmd->add_option("--kind", kind)->check(CLI::IsMember({"linear", "spherical", "random"}));
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--d", d)->required();
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "randomized oracle cross-checks");
    verify_cmd->add_option("--budget", budget, "instances per property");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

    auto* bench_cmd = app.add_subcommand("bench", "timing harness, CSV output");
    bench_cmd->add_option("--suite", suite)->check(CLI::IsMember({"hv", "contrib", "hssp"}));
    bench_cmd->add_option("--sizes", sizes_text);
    bench_cmd->add_option("--dims", dims_text);
    bench_cmd->add_option("--reps", reps);
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--out", out_path);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? ok : parse_error;
    }

    std::cout.precision(17);
    try
    {
        if (*hv_cmd)
        {
            const auto r = parse_reference(ref_text);
            for (const auto& s : load(file, r))
                std::cout << format_value(run_hv(s, r, algorithm)) << '\n';
        }
        else if (*contrib_cmd)
        {
            const auto r = parse_reference(ref_text);
            for (const auto& s : load(file, r))
            {
                if (*point_opt)
                {
                    if (point < 0 || point >= s.size())
                        throw Fail{index_error, "--point " + std::to_string(point) + " outside the front"};
                    std::cout << format_value(one_contribution(s.point(point), s, r)) << '\n';
                }
                else if (least)
                {
                    if (s.empty())
                        throw Fail{index_error, "least contributor of an empty front"};
                    const auto [i, v] = least_contributor(s, r);
                    std::cout << i << ' ' << format_value(v) << '\n';
                }
                else
                    for (double v : all_contributions(s, r).values)
                        std::cout << format_value(v) << '\n';
            }
        }
        else if (*hssp_cmd)
        {
            const auto r = parse_reference(ref_text);
            for (const auto& s : load(file, r))
            {
                const auto sol = run_hssp(s, r, k, method, seed, iters, swaps);
                for (std::size_t i = 0; i < sol.selected.size(); ++i)
                    std::cout << (i ? " " : "") << sol.selected[i];
                std::cout << '\n' << format_value(sol.hypervolume) << '\n';
                if (report_ratio)
                {
                    try
                    {
                        const double best = hssp_exhaustive(s, r, k).hypervolume;
                        std::cout << "ratio " << format_value(best > 0 ? sol.hypervolume / best : 1.0) << '\n';
                    }
                    catch (const BudgetExceeded& e)
                    {
                        std::cerr << "hvx: ratio skipped: " << e.what() << '\n';
                    }
                }
            }
        }
        else if (*gen_cmd)
        {
            const Front f = generate_front(parse_front_kind(kind), n, d, seed);
            if (out_path.empty())
                write_front(std::cout, f);
            else
            {
                std::ofstream out(out_path);
                if (!out)
                    throw Fail{failure, "cannot write " + out_path};
                write_front(out, f);
            }
        }
        else if (*verify_cmd)
        {
            VerifyOptions opt;
            opt.instances = budget;
            opt.seed = seed;
            opt.inject_fault = inject_fault;
            const auto results = run_verification(opt);
            print_verification(std::cout, results);
            for (const auto& res : results)
                if (!res.passed())
                    return verify_error;
        }
        else if (*bench_cmd)
        {
            BenchOptions opt;
            opt.suite = parse_bench_suite(suite);
            opt.sizes = parse_list(sizes_text);
            opt.dims = parse_list(dims_text);
            opt.reps = reps;
            opt.seed = seed;
            const auto records = run_bench(opt);
            if (out_path.empty())
                write_bench_csv(std::cout, records);
            else
            {
                std::ofstream out(out_path);
                if (!out)
                    throw Fail{failure, "cannot write " + out_path};
                write_bench_csv(out, records);
            }
        }
    }
    catch (const Fail& f)
    {
        std::cerr << "hvx: " << f.message << '\n';
        return f.code;
    }
    catch (const ParseError& e)
    {
        std::cerr << "hvx: " << e.what() << '\n';
        return parse_error;
    }
    catch (const DimensionMismatch& e)
    {
        std::cerr << "hvx: " << e.what() << '\n';
        return dimension_error;
    }
    catch (const GenerationFailed& e)
    {
        std::cerr << "hvx: " << e.what() << '\n';
        return generation_error;
    }
    catch (const std::exception& e)
    {
        std::cerr << "hvx: " << e.what() << '\n';
        return failure;
    }
    return ok;
}
