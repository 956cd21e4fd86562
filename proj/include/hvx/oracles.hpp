#pragma once

// Slow reference computations. Each one is written from the definition of
// the dominated region and shares no sweep code with the fast paths.

#include "hvx/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace hvx
{

inline constexpr const char* kOracleVersion = "hvx-grid-oracle/1";

/// Cell budget for hv_grid; HVX_ORACLE_BUDGET overrides the default of 1e8.
inline double default_grid_budget()
{
    if (const char* env = std::getenv("HVX_ORACLE_BUDGET"))
    {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0)
            return v;
    }
    return 1e8;
}

namespace oracle_detail
{

template <typename Scalar>
Scalar clipped_box(const PointT<Scalar>& corner, const PointT<Scalar>& r)
{
    Scalar v = 1;
    for (Index j = 0; j < r.size(); ++j)
    {
        if (corner(j) >= r(j))
            return 0;
        v *= r(j) - corner(j);
    }
    return v;
}

template <typename Scalar>
void inclusion_exclusion_walk(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r, Index next,
                              const PointT<Scalar>& corner, int sign, long double& sum)
{
    for (Index i = next; i < m.rows(); ++i)
    {
        PointT<Scalar> joined = corner;
        for (Index j = 0; j < m.cols(); ++j)
            joined(j) = std::max(joined(j), m(i, j));
        const Scalar v = clipped_box(joined, r);
        // A join outside [., r] stays outside for every superset.
        if (v == 0)
            continue;
        sum += sign * static_cast<long double>(v);
        inclusion_exclusion_walk(m, r, i + 1, joined, -sign, sum);
    }
}

template <typename Scalar>
Scalar hso_recursive(std::vector<PointT<Scalar>> pts, const PointT<Scalar>& r)
{
    const Index d = r.size();
    if (pts.empty())
        return 0;
    if (d == 2)
    {
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
        });
        Scalar area = 0;
        Scalar y_prev = r(1);
        for (const auto& p : pts)
            if (p(1) < y_prev)
            {
                area += (r(0) - p(0)) * (y_prev - p(1));
                y_prev = p(1);
            }
        return area;
    }
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return a(d - 1) < b(d - 1); });
    const PointT<Scalar> r_low = r.head(d - 1);
    Scalar total = 0;
    std::vector<PointT<Scalar>> slice;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        slice.push_back(pts[i].head(d - 1));
        const Scalar top = i + 1 < pts.size() ? pts[i + 1](d - 1) : r(d - 1);
        const Scalar height = top - pts[i](d - 1);
        if (height > 0)
            total += height * hso_recursive(slice, r_low);
    }
    return total;
}

/// Counter-based generator: draw i of stream `seed` is a pure function of (seed, i).
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t counter)
{
    return double(splitmix64(splitmix64(seed) ^ counter) >> 11) * 0x1.0p-53;
}

template <typename Scalar>
std::vector<Index> inside_rows(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    std::vector<Index> rows;
    for (Index i = 0; i < front.size(); ++i)
        if (weakly_dominates(front.point(i), ref.coords()))
            rows.push_back(i);
    return rows;
}

} // namespace oracle_detail

/// Signed sum over all nonempty subsets of the box of their join.
template <typename Scalar>
Scalar hv_inclusion_exclusion(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(front.dim(), ref.dim());
    if (front.size() > 20)
        throw BudgetExceeded("inclusion-exclusion oracle is limited to n <= 20");
    long double sum = 0;
    const PointT<Scalar> start = PointT<Scalar>::Constant(front.dim(), -std::numeric_limits<Scalar>::infinity());
    oracle_detail::inclusion_exclusion_walk(front.matrix(), ref.coords(), 0, start, +1, sum);
    return std::max(Scalar(0), Scalar(sum));
}

/// Coordinate-compressed grid: a cell counts when some point weakly dominates its lower corner.
template <typename Scalar>
Scalar hv_grid(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, double budget = default_grid_budget())
{
    detail::require_same_dim(front.dim(), ref.dim());
    const Index d = front.dim();
    const auto rows = oracle_detail::inside_rows(front, ref);
    if (rows.empty())
        return 0;

    std::vector<std::vector<Scalar>> axis(static_cast<std::size_t>(d));
    double cells = 1;
    for (Index j = 0; j < d; ++j)
    {
        auto& a = axis[std::size_t(j)];
        for (Index i : rows)
            a.push_back(front.matrix()(i, j));
        a.push_back(ref[j]);
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        cells *= double(a.size());
    }
    if (cells > budget)
        throw BudgetExceeded("grid oracle needs " + std::to_string(cells) + " cells, budget " +
                             std::to_string(budget));

    // Cell c spans [axis[c], axis[c+1]) per dimension; the last slot is r itself.
    std::vector<std::size_t> extent(static_cast<std::size_t>(d)), stride(static_cast<std::size_t>(d));
    std::size_t total = 1;
    for (Index j = d - 1; j >= 0; --j)
    {
        extent[std::size_t(j)] = axis[std::size_t(j)].size();
        stride[std::size_t(j)] = total;
        total *= extent[std::size_t(j)];
    }
    std::vector<unsigned char> covered(total, 0);
    for (Index i : rows)
    {
        std::size_t at = 0;
        for (Index j = 0; j < d; ++j)
        {
            const auto& a = axis[std::size_t(j)];
            at += std::size_t(std::lower_bound(a.begin(), a.end(), front.matrix()(i, j)) - a.begin()) *
                  stride[std::size_t(j)];
        }
        covered[at] = 1;
    }
    // Up-closure, one axis at a time (row-major order visits predecessors first).
    for (Index j = 0; j < d; ++j)
    {
        const std::size_t s = stride[std::size_t(j)];
        const std::size_t e = extent[std::size_t(j)];
        for (std::size_t c = 0; c < total; ++c)
            if ((c / s) % e != 0 && covered[c - s])
                covered[c] = 1;
    }

    long double volume = 0;
    for (std::size_t c = 0; c < total; ++c)
    {
        std::size_t rest = c;
        long double cell = 1;
        for (Index j = 0; j < d; ++j)
        {
            const std::size_t k = rest / stride[std::size_t(j)];
            rest %= stride[std::size_t(j)];
            const auto& a = axis[std::size_t(j)];
            if (k + 1 >= a.size())
            {
                cell = 0;
                break;
            }
            cell *= static_cast<long double>(a[k + 1] - a[k]);
        }
        if (covered[c])
            volume += cell;
    }
    return Scalar(volume);
}

/// Plain recursive slicing over the last objective, no bounding or caching.
template <typename Scalar>
Scalar hv_hso(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(front.dim(), ref.dim());
    std::vector<PointT<Scalar>> pts;
    for (Index i : oracle_detail::inside_rows(front, ref))
        pts.push_back(front.point(i).transpose());
    return oracle_detail::hso_recursive(std::move(pts), ref.coords());
}

template <typename Scalar>
struct McEstimateT
{
    Scalar estimate = 0;
    Scalar half_width_95 = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

using McEstimate = McEstimateT<double>;

/// Uniform sampling in [m, r], m the componentwise minimum of the front.
template <typename Scalar>
McEstimateT<Scalar> hv_monte_carlo(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                                   std::uint64_t samples, std::uint64_t seed)
{
    detail::require_same_dim(front.dim(), ref.dim());
    if (samples < 1)
        throw InvalidInput("Monte Carlo needs at least one sample");
    McEstimateT<Scalar> out;
    out.samples = samples;
    out.seed = seed;
    const auto rows = oracle_detail::inside_rows(front, ref);
    if (rows.empty())
        return out;

    const Index d = front.dim();
    const auto& m = front.matrix();
    PointT<Scalar> lo = m.row(rows.front()).transpose();
    for (Index i : rows)
        lo = lo.cwiseMin(m.row(i).transpose());
    Scalar box = 1;
    for (Index j = 0; j < d; ++j)
        box *= ref[j] - lo(j);
    if (!(box > 0))
        return out;

    std::uint64_t hits = 0;
    std::uint64_t counter = 0;
    PointT<Scalar> q(d);
    for (std::uint64_t s = 0; s < samples; ++s)
    {
        for (Index j = 0; j < d; ++j)
            q(j) = lo(j) + Scalar(oracle_detail::uniform01(seed, counter++)) * (ref[j] - lo(j));
        for (Index i : rows)
            if (weakly_dominates(m.row(i), q))
            {
                ++hits;
                break;
            }
    }
    const double p = double(hits) / double(samples);
    out.estimate = Scalar(p) * box;
    out.half_width_95 = Scalar(1.96 * std::sqrt(p * (1 - p) / double(samples))) * box;
    return out;
}

/// hv_grid(S + p) - hv_grid(S - p), removal by value.
template <typename Derived, typename Scalar>
Scalar contribution_oracle(const Eigen::MatrixBase<Derived>& p, const FrontT<Scalar>& front,
                           const ReferencePointT<Scalar>& ref, double budget = default_grid_budget())
{
    detail::require_same_dim(p.size(), front.dim());
    std::vector<Index> others;
    for (Index i = 0; i < front.size(); ++i)
        if (!same_point(front.point(i), p))
            others.push_back(i);
    const FrontT<Scalar> without = front.subset(others);
    FrontT<Scalar> with = without;
    with.push_back(p);
    return hv_grid(with, ref, budget) - hv_grid(without, ref, budget);
}

} // namespace hvx
