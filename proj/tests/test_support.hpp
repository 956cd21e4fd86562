#pragma once

#include "hvx/generators.hpp"
#include "hvx/hvx.hpp"
#include "hvx/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

namespace hvx::testing
{

using sampling::random_nondominated;
using sampling::random_points;
using sampling::reference_for;
using sampling::Rng;

// Values frozen from the exact rational grid oracle (kOracleVersion).
inline Front six_point_front()
{
    return Front{{5, 5, 1}, {7, 3, 2}, {1, 7, 4}, {8, 1, 5}, {4, 2, 6}, {2, 4, 8}};
}
inline const ReferencePoint six_point_ref{10, 10, 10};
inline constexpr double kSixPointHv = 425;
inline constexpr double kSixPointContributions[] = {53, 20, 48, 12, 38, 12};
inline constexpr double kSixPointFirst = 53;

inline ::testing::AssertionResult rel_near(double got, double want, double rel, double scale = 0)
{
    const double tol = rel * std::max({std::abs(want), std::abs(scale), 1e-300});
    if (std::abs(got - want) <= tol)
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "got " << got << ", want " << want << " (diff "
                                         << std::abs(got - want) << ", tol " << tol << ")";
}

/// Mix of arbitrary point sets (grid coordinates or continuous) and nondominated fronts.
inline Front mixed_instance(Rng& rng, Index d, Index max_n)
{
    const Index n = sampling::uniform_index(rng, 0, max_n);
    const double pick = sampling::uniform(rng);
    if (pick < 0.3)
        return random_points(n, d, rng, true);
    if (pick < 0.6)
        return random_points(n, d, rng, false);
    return random_nondominated(n, d, rng);
}

} // namespace hvx::testing
