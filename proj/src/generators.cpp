#include "hvx/generators.hpp"

#include "hvx/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hvx
{

FrontKind parse_front_kind(const std::string& name)
{
    if (name == "linear")
        return FrontKind::linear;
    if (name == "spherical")
        return FrontKind::spherical;
    if (name == "random")
        return FrontKind::random;
    throw InvalidInput("unknown front kind '" + name + "'");
}

namespace
{

// Simplex and sphere samples can collide only by accident; redraw until they don't.
template <typename Draw>
Front draw_distinct(Index n, Index d, std::mt19937_64& rng, Draw draw)
{
    for (int attempt = 0; attempt < 100; ++attempt)
    {
        PointMatrix m(n, d);
        for (Index i = 0; i < n; ++i)
            m.row(i) = draw(rng).transpose();
        if (is_nondominated(m))
            return Front(std::move(m), NondominatedFlag::verified);
    }
    throw GenerationFailed("could not draw " + std::to_string(n) + " distinct points");
}

Front random_front(Index n, Index d, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Index batch = std::max<Index>(4 * n, 1024);
    PointMatrix pool(0, d);
    for (int round = 0; round < 256; ++round)
    {
        PointMatrix grown(pool.rows() + batch, d);
        grown.topRows(pool.rows()) = pool;
        for (Index i = pool.rows(); i < grown.rows(); ++i)
            for (Index j = 0; j < d; ++j)
                grown(i, j) = u(rng);
        pool = grown(nondominated_rows(grown), Eigen::all);
        if (pool.rows() >= n)
            return Front(PointMatrix(pool.topRows(n)), NondominatedFlag::verified);
    }
    throw GenerationFailed("only " + std::to_string(pool.rows()) + " of " + std::to_string(n) +
                           " nondominated points after bounded retries");
}

} // namespace

Front generate_front(FrontKind kind, Index n, Index d, std::uint64_t seed)
{
    if (d < 2)
        throw InvalidInput("fronts need at least two objectives");
    if (n < 0)
        throw InvalidInput("negative front size");
    if (n == 0)
        return Front(d);
    std::mt19937_64 rng(seed);
    switch (kind)
    {
    case FrontKind::linear:
        return draw_distinct(n, d, rng, [d](std::mt19937_64& g) {
            std::exponential_distribution<double> e(1.0);
            Point p(d);
            for (Index j = 0; j < d; ++j)
                p(j) = e(g);
            p /= p.sum();
            p(d - 1) = std::max(0.0, 1.0 - p.head(d - 1).sum());
            return p;
        });
    case FrontKind::spherical:
        return draw_distinct(n, d, rng, [d](std::mt19937_64& g) {
            std::normal_distribution<double> z(0.0, 1.0);
            Point p(d);
            for (Index j = 0; j < d; ++j)
                p(j) = std::abs(z(g));
            return Point(p / p.norm());
        });
    case FrontKind::random:
        return random_front(n, d, rng);
    }
    throw InvalidInput("unknown front kind");
}

Front linear_grid_2d(Index n)
{
    if (n < 2)
        throw InvalidInput("a linear grid needs at least two points");
    PointMatrix m(n, 2);
    for (Index i = 0; i < n; ++i)
    {
        m(i, 0) = double(i) / double(n - 1);
        m(i, 1) = double(n - 1 - i) / double(n - 1);
    }
    return Front(std::move(m), NondominatedFlag::verified);
}

} // namespace hvx
