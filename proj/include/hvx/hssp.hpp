#pragma once

#include "hvx/contributions.hpp"
#include "hvx/hv_exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hvx
{

enum class HsspMethod
{
    exact2d,
    exhaustive,
    greedy_inc,
    greedy_dec,
    local_search,
    gsemo
};

inline const char* to_string(HsspMethod m)
{
    switch (m)
    {
    case HsspMethod::exact2d: return "exact2d";
    case HsspMethod::exhaustive: return "exhaustive";
    case HsspMethod::greedy_inc: return "greedy-inc";
    case HsspMethod::greedy_dec: return "greedy-dec";
    case HsspMethod::local_search: return "ls";
    case HsspMethod::gsemo: return "gsemo";
    }
    return "?";
}

template <typename Scalar>
struct HsspStepT
{
    std::vector<Index> added;
    std::vector<Index> removed;
    Scalar hv = 0; ///< hypervolume of the working set after the step
};

template <typename Scalar>
struct HsspSolutionT
{
    std::vector<Index> selected; ///< sorted indices into the input front
    Scalar hypervolume = 0;
    HsspMethod method = HsspMethod::exhaustive;
    std::vector<HsspStepT<Scalar>> trace;
};

using HsspStep = HsspStepT<double>;
using HsspSolution = HsspSolutionT<double>;

inline constexpr double kDefaultExhaustiveBudget = 2e6;

namespace detail
{

inline void require_k(Index k, Index n)
{
    if (k < 0 || k > n)
        throw InvalidInput("k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

template <typename Scalar>
Scalar subset_hv(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, const std::vector<Index>& rows)
{
    return hv(front.subset(rows), ref).value;
}

template <typename Scalar>
HsspSolutionT<Scalar> finish(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                             std::vector<Index> selected, HsspMethod method,
                             std::vector<HsspStepT<Scalar>> trace = {})
{
    std::sort(selected.begin(), selected.end());
    HsspSolutionT<Scalar> out;
    out.hypervolume = subset_hv(front, ref, selected);
    out.selected = std::move(selected);
    out.method = method;
    out.trace = std::move(trace);
    return out;
}

inline double binomial(Index n, Index k)
{
    double c = 1;
    for (Index i = 1; i <= k; ++i)
        c = c * double(n - k + i) / double(i);
    return c;
}

} // namespace detail

/// Optimal 2D subset by dynamic programming over the staircase.
///
/// With the useful points sorted by ascending x, f(t, i) is the best area of
/// t points whose rightmost is i; adding i after j gains (r_x - x_i)(y_j - y_i).
/// Runs in O(k m^2) for m useful points. Returns all of them when k >= m.
template <typename Scalar>
HsspSolutionT<Scalar> hssp_exact_2d(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, Index k)
{
    detail::require_dim(front.dim(), 2);
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_k(k, front.size());
    const auto& m = front.matrix();
    const auto& r = ref.coords();

    std::vector<Index> useful;
    for (Index i : nondominated_rows(m))
        if (strongly_dominates(m.row(i), r))
            useful.push_back(i);
    std::sort(useful.begin(), useful.end(), [&](Index a, Index b) { return m(a, 0) < m(b, 0); });
    const Index n = Index(useful.size());
    if (k >= n)
        return detail::finish(front, ref, useful, HsspMethod::exact2d);
    if (k == 0)
        return detail::finish(front, ref, {}, HsspMethod::exact2d);

    const auto x = [&](Index i) { return m(useful[std::size_t(i)], 0); };
    const auto y = [&](Index i) { return m(useful[std::size_t(i)], 1); };
    const Scalar minus_inf = -std::numeric_limits<Scalar>::infinity();
    // f[t][i] and parent[t][i] for t = 1..k, flattened.
    std::vector<Scalar> f(std::size_t(k * n), minus_inf);
    std::vector<Index> parent(std::size_t(k * n), -1);
    const auto at = [n](Index t, Index i) { return std::size_t((t - 1) * n + i); };

    for (Index i = 0; i < n; ++i)
        f[at(1, i)] = (r(0) - x(i)) * (r(1) - y(i));
    for (Index t = 2; t <= k; ++t)
        for (Index i = t - 1; i < n; ++i)
            for (Index j = t - 2; j < i; ++j)
            {
                const Scalar prev = f[at(t - 1, j)];
                if (prev == minus_inf)
                    continue;
                const Scalar v = prev + (r(0) - x(i)) * (y(j) - y(i));
                if (v > f[at(t, i)])
                {
                    f[at(t, i)] = v;
                    parent[at(t, i)] = j;
                }
            }

    Index best = k - 1;
    for (Index i = k; i < n; ++i)
        if (f[at(k, i)] > f[at(k, best)])
            best = i;
    std::vector<Index> selected;
    for (Index t = k, i = best; t >= 1; i = parent[at(t, i)], --t)
        selected.push_back(useful[std::size_t(i)]);
    return detail::finish(front, ref, std::move(selected), HsspMethod::exact2d);
}

/// Best subset of size min(k, n) by enumeration in lexicographic order.
/// A later subset replaces the incumbent only if it is better by more than a
/// relative 1e-12, so rounding noise cannot override the index tie-break.
template <typename Scalar>
HsspSolutionT<Scalar> hssp_exhaustive(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, Index k,
                                      double budget = kDefaultExhaustiveBudget)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_k(k, front.size());
    const Index n = front.size();
    if (detail::binomial(n, k) > budget)
        throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") subsets exceed the budget");

    std::vector<Index> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), Index(0));
    std::vector<Index> best = pick;
    Scalar best_hv = detail::subset_hv(front, ref, pick);
    while (k > 0)
    {
        // Next combination in lexicographic order.
        Index pos = k - 1;
        while (pos >= 0 && pick[std::size_t(pos)] == n - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++pick[std::size_t(pos)];
        for (Index q = pos + 1; q < k; ++q)
            pick[std::size_t(q)] = pick[std::size_t(q - 1)] + 1;
        const Scalar v = detail::subset_hv(front, ref, pick);
        if (v > best_hv + Scalar(1e-12) * std::abs(best_hv))
        {
            best_hv = v;
            best = pick;
        }
    }
    return detail::finish(front, ref, std::move(best), HsspMethod::exhaustive);
}

/// k greedy steps, each moving the largest contributor to the accepted set.
/// The trace is the full chain: its first k' steps are the answer for k'.
template <typename Scalar>
HsspSolutionT<Scalar> hssp_greedy_incremental(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                                              Index k)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_k(k, front.size());
    TwoSetContributionStateT<Scalar> state(front, FrontT<Scalar>(front.dim()), ref);
    std::vector<Index> ids(std::size_t(front.size()));
    std::iota(ids.begin(), ids.end(), Index(0));

    std::vector<Index> selected;
    std::vector<HsspStepT<Scalar>> trace;
    Scalar running = 0;
    for (Index step = 0; step < k && !ids.empty(); ++step)
    {
        const auto& c = state.contributions();
        const Index i = Index(std::max_element(c.begin(), c.end()) - c.begin());
        const PointT<Scalar> p = state.candidates().point(i).transpose();
        running += c[std::size_t(i)];
        selected.push_back(ids[std::size_t(i)]);
        trace.push_back({{ids[std::size_t(i)]}, {}, running});

        // Copies of p can never add volume once p is accepted.
        for (Index j = state.candidates().size() - 1; j >= 0; --j)
            if (same_point(state.candidates().point(j), p))
            {
                state.erase_candidate(j);
                ids.erase(ids.begin() + j);
            }
        state.add_accepted(p);
    }
    return detail::finish(front, ref, std::move(selected), HsspMethod::greedy_inc, std::move(trace));
}

/// n - k steps, each discarding a least contributor of the current set.
template <typename Scalar>
HsspSolutionT<Scalar> hssp_greedy_decremental(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                                              Index k)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_k(k, front.size());
    std::vector<Index> ids(std::size_t(front.size()));
    std::iota(ids.begin(), ids.end(), Index(0));
    FrontT<Scalar> current = front;
    auto table = all_contributions(current, ref);

    std::vector<HsspStepT<Scalar>> trace;
    while (current.size() > k)
    {
        const auto& v = table.values;
        const Index i = Index(std::min_element(v.begin(), v.end()) - v.begin());
        const PointT<Scalar> p = current.point(i).transpose();
        table = update_all_contributions(current, ref, table, p, UpdateMode::decremental);
        current = current.without(i);
        trace.push_back({{}, {ids[std::size_t(i)]}, table.total_hv});
        ids.erase(ids.begin() + i);
    }
    return detail::finish(front, ref, std::move(ids), HsspMethod::greedy_dec, std::move(trace));
}

/// Random k-subset improved by random swaps; a move is kept only if it strictly helps.
template <typename Scalar>
HsspSolutionT<Scalar> hssp_local_search(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, Index k,
                                        Index swaps_per_move, Index max_iters, std::uint64_t seed)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_k(k, front.size());
    if (max_iters < 0)
        throw InvalidInput("max_iters must be nonnegative");
    const Index n = front.size();
    std::mt19937_64 rng(seed);

    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Index> in(perm.begin(), perm.begin() + k);
    std::vector<Index> out(perm.begin() + k, perm.end());
    Scalar current = detail::subset_hv(front, ref, in);

    std::vector<HsspStepT<Scalar>> trace;
    const Index swaps = std::min({std::max<Index>(swaps_per_move, 1), k, n - k});
    for (Index it = 0; it < max_iters; ++it)
    {
        HsspStepT<Scalar> step;
        if (swaps > 0)
        {
            auto cand_in = in;
            auto cand_out = out;
            std::shuffle(cand_in.begin(), cand_in.end(), rng);
            std::shuffle(cand_out.begin(), cand_out.end(), rng);
            for (Index s = 0; s < swaps; ++s)
                std::swap(cand_in[std::size_t(s)], cand_out[std::size_t(s)]);
            const Scalar v = detail::subset_hv(front, ref, cand_in);
            if (v > current)
            {
                step.added.assign(cand_in.begin(), cand_in.begin() + swaps);
                step.removed.assign(cand_out.begin(), cand_out.begin() + swaps);
                in = std::move(cand_in);
                out = std::move(cand_out);
                current = v;
            }
        }
        step.hv = current;
        trace.push_back(std::move(step));
    }
    return detail::finish(front, ref, std::move(in), HsspMethod::local_search, std::move(trace));
}

/// Iteration budget n^2 (ceil(ln n) + k).
inline Index gsemo_default_iterations(Index n, Index k)
{
    if (n <= 1)
        return 1;
    return n * n * (Index(std::ceil(std::log(double(n)))) + k);
}

/// Bitmask population under (hv if feasible else -1, points left out), both maximized.
template <typename Scalar>
HsspSolutionT<Scalar> hssp_gsemo(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, Index k,
                                 Index max_iters, std::uint64_t seed)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_k(k, front.size());
    if (max_iters < 0)
        throw InvalidInput("max_iters must be nonnegative");
    const Index n = front.size();

    struct Individual
    {
        std::vector<bool> bits;
        Scalar hv;
        Index left_out;
    };
    const auto rows_of = [](const std::vector<bool>& bits) {
        std::vector<Index> rows;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i])
                rows.push_back(Index(i));
        return rows;
    };
    const auto evaluate = [&](std::vector<bool> bits) {
        const auto rows = rows_of(bits);
        const Index size = Index(rows.size());
        const Scalar value = size <= k ? detail::subset_hv(front, ref, rows) : Scalar(-1);
        return Individual{std::move(bits), value, n - size};
    };
    const auto weakly_better = [](const Individual& a, const Individual& b) {
        return a.hv >= b.hv && a.left_out >= b.left_out;
    };

    std::vector<Individual> population{evaluate(std::vector<bool>(std::size_t(n), false))};
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(n > 0 ? 1.0 / double(n) : 0.0);
    std::vector<HsspStepT<Scalar>> trace;
    for (Index it = 0; it < max_iters; ++it)
    {
        std::uniform_int_distribution<std::size_t> choose(0, population.size() - 1);
        std::vector<bool> bits = population[choose(rng)].bits;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (flip(rng))
                bits[i] = !bits[i];
        Individual child = evaluate(std::move(bits));
        const bool rejected = std::any_of(population.begin(), population.end(),
                                          [&](const Individual& m) { return weakly_better(m, child); });
        if (rejected)
            continue;
        std::erase_if(population, [&](const Individual& m) { return weakly_better(child, m); });
        population.push_back(std::move(child));
    }

    const Individual* best = nullptr;
    for (const auto& ind : population)
        if (n - ind.left_out <= k && (!best || ind.hv > best->hv))
            best = &ind;
    return detail::finish(front, ref, rows_of(best->bits), HsspMethod::gsemo, std::move(trace));
}

template <typename Scalar>
struct MethodRatioT
{
    HsspMethod method;
    Scalar hv = 0;
    Scalar ratio = 0;
    std::optional<Scalar> guarantee; ///< proven lower bound on the ratio, when one applies
    bool holds = true;
};

template <typename Scalar>
struct ApproximationReportT
{
    Scalar optimum = 0;
    Index n = 0;
    Index k = 0;
    std::vector<MethodRatioT<Scalar>> methods;
    /// 1 - (1 - m/k)(1 - 1/k)^(k - m) with m = 2k - n, logged for k > n/2 only.
    std::optional<Scalar> sharper_incremental_bound;
};

using ApproximationReport = ApproximationReportT<double>;

/// Every method against the enumerated optimum, with the greedy guarantees checked.
template <typename Scalar>
ApproximationReportT<Scalar> approximation_report(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                                                  Index k, std::uint64_t seed = 1,
                                                  double budget = kDefaultExhaustiveBudget)
{
    ApproximationReportT<Scalar> rep;
    rep.n = front.size();
    rep.k = k;
    rep.optimum = hssp_exhaustive(front, ref, k, budget).hypervolume;

    const auto add = [&](const HsspSolutionT<Scalar>& sol, std::optional<Scalar> guarantee) {
        MethodRatioT<Scalar> m;
        m.method = sol.method;
        m.hv = sol.hypervolume;
        m.ratio = rep.optimum > 0 ? sol.hypervolume / rep.optimum : Scalar(1);
        m.guarantee = guarantee;
        m.holds = !guarantee || m.ratio >= *guarantee - Scalar(1e-12);
        rep.methods.push_back(m);
    };
    const Scalar e_bound = Scalar(1) - Scalar(std::exp(-1.0));
    if (front.dim() == 2)
        add(hssp_exact_2d(front, ref, k), Scalar(1));
    add(hssp_greedy_incremental(front, ref, k), e_bound);
    add(hssp_greedy_decremental(front, ref, k),
        rep.n > 0 ? Scalar(k) / Scalar(rep.n) : Scalar(1));
    add(hssp_local_search(front, ref, k, 1, 10 * std::max<Index>(rep.n, 1), seed), std::nullopt);
    add(hssp_gsemo(front, ref, k, gsemo_default_iterations(rep.n, k), seed), std::nullopt);

    if (k > 0 && 2 * k > rep.n)
    {
        const double kk = double(k);
        const double mm = double(2 * k - rep.n);
        rep.sharper_incremental_bound = Scalar(1.0 - (1.0 - mm / kk) * std::pow(1.0 - 1.0 / kk, kk - mm));
    }
    return rep;
}

} // namespace hvx
