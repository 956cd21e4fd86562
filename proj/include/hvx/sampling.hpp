#pragma once

// Random instances for property checks. Coordinates come either from a
// continuous range or from a small integer grid; the grid makes shared
// coordinates, duplicates and boundary points common.

#include "hvx/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hvx::sampling
{

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Index uniform_index(Rng& rng, Index lo, Index hi)
{
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

/// n points in [0,1)^d, or on the grid {0, .., 7}/8 when `grid`.
inline Front random_points(Index n, Index d, Rng& rng, bool grid = false)
{
    PointMatrix m(n, d);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < d; ++j)
            m(i, j) = grid ? double(uniform_index(rng, 0, 7)) / 8.0 : uniform(rng);
    return n ? Front(std::move(m)) : Front(d);
}

/// n mutually nondominated points on the surface ||x||_q = 1 (positive orthant),
/// q drawn from {0.5, 1, 2, 3}.
inline Front random_nondominated(Index n, Index d, Rng& rng)
{
    if (n == 0)
        return Front(d);
    if (d == 2)
    {
        // Distinct x ascending paired with distinct y descending.
        std::vector<double> xs, ys;
        while (Index(xs.size()) < n)
        {
            xs.push_back(uniform(rng));
            ys.push_back(uniform(rng));
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            std::sort(ys.begin(), ys.end());
            ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
            xs.resize(std::min(xs.size(), ys.size()));
            ys.resize(xs.size());
        }
        PointMatrix m(n, 2);
        for (Index i = 0; i < n; ++i)
        {
            m(i, 0) = xs[std::size_t(i)];
            m(i, 1) = ys[std::size_t(n - 1 - i)];
        }
        // Present the points in a random order.
        std::vector<Index> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), Index(0));
        std::shuffle(perm.begin(), perm.end(), rng);
        return Front(PointMatrix(m(perm, Eigen::all)), NondominatedFlag::verified);
    }
    static constexpr double exponents[] = {0.5, 1.0, 2.0, 3.0};
    const double q = exponents[uniform_index(rng, 0, 3)];
    for (;;)
    {
        PointMatrix m(n, d);
        for (Index i = 0; i < n; ++i)
        {
            double norm = 0;
            for (Index j = 0; j < d; ++j)
            {
                m(i, j) = uniform(rng, 1e-3, 1.0);
                norm += std::pow(m(i, j), q);
            }
            m.row(i) /= std::pow(norm, 1.0 / q);
        }
        if (is_nondominated(m))
            return Front(std::move(m), NondominatedFlag::verified);
    }
}

/// Reference point just beyond the front's bounding box (or the unit box).
inline ReferencePoint reference_for(const Front& front, double margin = 0.1)
{
    Point r = Point::Ones(front.dim());
    for (Index i = 0; i < front.size(); ++i)
        r = r.cwiseMax(front.point(i).transpose());
    return ReferencePoint(Point(r.array() + margin));
}

} // namespace hvx::sampling
