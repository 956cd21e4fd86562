#include "hvx/verify.hpp"

#include "hvx/hvx.hpp"
#include "hvx/sampling.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace hvx
{

namespace
{

bool close(double a, double b, double scale, double rel)
{
    return std::abs(a - b) <= rel * std::max({std::abs(scale), std::abs(a), std::abs(b), 1e-300});
}

// Runs `check` on `instances` derived seeds; a check returns an empty string on success.
PropertyResult property(const std::string& name, const VerifyOptions& opt, std::uint64_t salt,
                        const std::function<std::string(sampling::Rng&)>& check)
{
    PropertyResult res;
    res.name = name;
    for (int i = 0; i < opt.instances; ++i)
    {
        sampling::Rng rng(opt.seed * 1000003ULL + salt * 7919ULL + std::uint64_t(i));
        std::string msg;
        try
        {
            msg = check(rng);
        }
        catch (const std::exception& e)
        {
            msg = std::string("exception: ") + e.what();
        }
        ++res.checked;
        if (!msg.empty())
        {
            if (res.failures++ == 0)
                res.first_failure = "instance " + std::to_string(i) + ": " + msg;
        }
    }
    return res;
}

std::string mismatch(const char* what, double got, double want)
{
    std::ostringstream s;
    s.precision(17);
    s << what << " " << got << " vs " << want;
    return s.str();
}

Front mixed_instance(sampling::Rng& rng, Index max_d, Index max_n)
{
    const Index d = sampling::uniform_index(rng, 2, max_d);
    const Index n = sampling::uniform_index(rng, 0, max_n);
    return sampling::uniform(rng) < 0.5 ? sampling::random_points(n, d, rng, sampling::uniform(rng) < 0.5)
                                        : sampling::random_nondominated(n, d, rng);
}

} // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions& opt)
{
    std::vector<PropertyResult> out;
    const double fault = opt.inject_fault ? 1.0 + 1e-6 : 1.0;

    out.push_back(property("hv agrees with oracles", opt, 1, [&](sampling::Rng& rng) -> std::string {
        const Front s = mixed_instance(rng, 6, 10);
        const auto r = sampling::reference_for(s, sampling::uniform(rng) < 0.3 ? -0.2 : 0.1);
        const double fast = hv(s, r).value * fault;
        const double grid = hv_grid(s, r);
        if (!close(fast, grid, grid, 1e-9))
            return mismatch("hv vs grid", fast, grid);
        if (const double h = hv_hso(s, r); !close(h, grid, grid, 1e-9))
            return mismatch("hso vs grid", h, grid);
        if (const double ie = hv_inclusion_exclusion(s, r); !close(ie, grid, grid, 1e-9))
            return mismatch("inclusion-exclusion vs grid", ie, grid);
        return {};
    }));

    out.push_back(property("contributions match removal", opt, 2, [&](sampling::Rng& rng) -> std::string {
        const Front s = mixed_instance(rng, 5, 10);
        const auto r = sampling::reference_for(s);
        const auto table = all_contributions(s, r);
        const double total = hv_grid(s, r);
        for (Index i = 0; i < s.size(); ++i)
        {
            const double want = total - hv_grid(s.without(i), r);
            if (!close(table.values[std::size_t(i)], want, total, 1e-9))
                return mismatch("contribution", table.values[std::size_t(i)], want);
        }
        return {};
    }));

    out.push_back(property("updates match recomputation", opt, 3, [&](sampling::Rng& rng) -> std::string {
        const Index d = sampling::uniform_index(rng, 2, 4);
        const Front pool = sampling::random_nondominated(12, d, rng);
        const auto r = sampling::reference_for(pool);
        Front s(d);
        auto table = all_contributions(s, r);
        for (Index i = 0; i < pool.size(); ++i)
        {
            const auto p = pool.point(i);
            if (s.size() > 0 && sampling::uniform(rng) < 0.3)
            {
                const Index out_i = sampling::uniform_index(rng, 0, s.size() - 1);
                const Point q = s.point(out_i).transpose();
                table = update_all_contributions(s, r, table, q, UpdateMode::decremental);
                s = s.without(out_i);
            }
            table = update_all_contributions(s, r, table, p, UpdateMode::incremental);
            s.push_back(p);
        }
        const auto fresh = all_contributions(s, r);
        for (Index i = 0; i < s.size(); ++i)
            if (!close(table.values[std::size_t(i)], fresh.values[std::size_t(i)], fresh.total_hv, 1e-9))
                return mismatch("updated contribution", table.values[std::size_t(i)], fresh.values[std::size_t(i)]);
        return {};
    }));

    out.push_back(property("exact 2d subset selection is optimal", opt, 4, [&](sampling::Rng& rng) -> std::string {
        const Index n = sampling::uniform_index(rng, 1, 10);
        const Front s = sampling::random_points(n, 2, rng, sampling::uniform(rng) < 0.5);
        const auto r = sampling::reference_for(s);
        const Index k = sampling::uniform_index(rng, 0, n);
        const double dp = hssp_exact_2d(s, r, k).hypervolume;
        const double opt_hv = hssp_exhaustive(s, r, k).hypervolume;
        if (!close(dp, opt_hv, opt_hv, 1e-12))
            return mismatch("dp vs enumeration", dp, opt_hv);
        return {};
    }));

    out.push_back(property("local upper bound counts", opt, 5, [&](sampling::Rng& rng) -> std::string {
        const Index d = sampling::uniform_index(rng, 2, 3);
        const Index n = sampling::uniform_index(rng, 0, 12);
        const Front s = sampling::random_nondominated(n, d, rng);
        const auto r = sampling::reference_for(s);
        const auto lub = local_upper_bounds(s, r);
        const Index want = d == 2 ? n + 1 : 2 * n + 1;
        if (lub.bounds.rows() != want)
            return mismatch("bound count", double(lub.bounds.rows()), double(want));
        return {};
    }));

    out.push_back(property("greedy guarantees", opt, 6, [&](sampling::Rng& rng) -> std::string {
        const Index d = sampling::uniform_index(rng, 2, 4);
        const Index n = sampling::uniform_index(rng, 1, 9);
        const Front s = sampling::random_nondominated(n, d, rng);
        const auto r = sampling::reference_for(s);
        const Index k = sampling::uniform_index(rng, 0, n);
        const double best = hssp_exhaustive(s, r, k).hypervolume;
        if (best <= 0)
            return {};
        const double inc = hssp_greedy_incremental(s, r, k).hypervolume / best;
        const double dec = hssp_greedy_decremental(s, r, k).hypervolume / best;
        if (inc < 1.0 - std::exp(-1.0) - 1e-12)
            return mismatch("incremental ratio", inc, 1.0 - std::exp(-1.0));
        if (dec < double(k) / double(n) - 1e-12)
            return mismatch("decremental ratio", dec, double(k) / double(n));
        return {};
    }));

    return out;
}

void print_verification(std::ostream& out, const std::vector<PropertyResult>& results)
{
    int failed = 0;
    for (const auto& r : results)
    {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " instances";
        if (!r.passed())
            out << ", " << r.failures << " failed; " << r.first_failure;
        out << ")\n";
        failed += r.passed() ? 0 : 1;
    }
    out << (failed ? std::to_string(failed) + " of " + std::to_string(results.size()) + " properties failed"
                   : "all " + std::to_string(results.size()) + " properties passed")
        << '\n';
}

} // namespace hvx
