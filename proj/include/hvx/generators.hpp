#pragma once

#include "hvx/core.hpp"

#include <cstdint>
#include <string>

namespace hvx
{

enum class FrontKind
{
    linear,    ///< on the simplex sum(x) = 1
    spherical, ///< on the unit sphere, positive orthant
    random     ///< uniform in [0,1]^d, nondominated survivors
};

FrontKind parse_front_kind(const std::string& name);

/// Raised when the random generator cannot collect enough survivors.
class GenerationFailed : public Error
{
  public:
    using Error::Error;
};

/// Mutually nondominated fronts of exactly n points, deterministic per seed.
Front generate_front(FrontKind kind, Index n, Index d, std::uint64_t seed);

/// n evenly spaced points on x + y = 1, from (0, 1) to (1, 0).
Front linear_grid_2d(Index n);

} // namespace hvx
