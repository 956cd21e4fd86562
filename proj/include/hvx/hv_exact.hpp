#pragma once

#include "hvx/bounding.hpp"
#include "hvx/dominance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace hvx
{

enum class HvAlgorithm
{
    dim2,
    dim3,
    dim4,
    wfg,
    hso,
    inclusion_exclusion,
    grid
};

inline const char* to_string(HvAlgorithm a)
{
    switch (a)
    {
    case HvAlgorithm::dim2: return "2d";
    case HvAlgorithm::dim3: return "3d";
    case HvAlgorithm::dim4: return "4d";
    case HvAlgorithm::wfg: return "wfg";
    case HvAlgorithm::hso: return "hso";
    case HvAlgorithm::inclusion_exclusion: return "ie";
    case HvAlgorithm::grid: return "grid";
    }
    return "?";
}

template <typename Scalar>
struct HvResultT
{
    Scalar value = 0;
    HvAlgorithm algorithm = HvAlgorithm::wfg;
    Index n_used = 0; ///< points left after clipping against r
};

using HvResult = HvResultT<double>;

enum class UpdateMode
{
    incremental,
    decremental
};

namespace detail
{

template <typename A, typename B>
typename A::Scalar box_volume(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& r)
{
    typename A::Scalar v = 1;
    for (Index i = 0; i < p.size(); ++i)
    {
        if (!(p(i) < r(i)))
            return 0;
        v *= r(i) - p(i);
    }
    return v;
}

/// Rows whose box against r has nonzero volume.
template <typename Scalar>
PointMatrixT<Scalar> positive_boxes(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    std::vector<Index> keep;
    for (Index i = 0; i < m.rows(); ++i)
        if (strongly_dominates(m.row(i), r))
            keep.push_back(i);
    return m(keep, Eigen::all);
}

// The sweeps below assume every row weakly dominates r; dominated rows and
// repeats are tolerated.

template <typename Scalar>
Scalar area_2d(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    std::vector<Index> order(std::size_t(m.rows()));
    std::iota(order.begin(), order.end(), Index(0));
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return m(a, 0) < m(b, 0) || (m(a, 0) == m(b, 0) && m(a, 1) < m(b, 1));
    });
    CompensatedSum<Scalar> area;
    Scalar y_prev = r(1);
    for (Index i : order)
        if (m(i, 1) < y_prev)
        {
            area.add((r(0) - m(i, 0)) * (y_prev - m(i, 1)));
            y_prev = m(i, 1);
        }
    return area.value();
}

/// Base area of the sweep: (x -> y) staircase of mutually nondominated projections.
template <typename Scalar>
class Staircase2D
{
  public:
    Staircase2D(Scalar ref_x, Scalar ref_y) : ref_x_(ref_x), ref_y_(ref_y) {}

    /// Inserts (x, y); returns the area it adds, zero when already covered.
    /// Covered stairs are removed (structure-destructive).
    Scalar insert(Scalar x, Scalar y)
    {
        auto it = stairs_.upper_bound(x);
        if (it != stairs_.begin() && std::prev(it)->second <= y)
            return 0;
        it = stairs_.lower_bound(x);
        Scalar cur_x = x;
        Scalar cur_y = it == stairs_.begin() ? ref_y_ : std::prev(it)->second;
        CompensatedSum<Scalar> added;
        while (it != stairs_.end() && it->second >= y)
        {
            added.add((it->first - cur_x) * (cur_y - y));
            cur_x = it->first;
            cur_y = it->second;
            it = stairs_.erase(it);
        }
        const Scalar right = it == stairs_.end() ? ref_x_ : it->first;
        added.add((right - cur_x) * (cur_y - y));
        stairs_.emplace_hint(it, x, y);
        return added.value();
    }

    std::size_t size() const noexcept { return stairs_.size(); }

  private:
    Scalar ref_x_;
    Scalar ref_y_;
    std::map<Scalar, Scalar> stairs_;
};

template <typename Scalar>
Scalar volume_3d(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    std::vector<Index> order(std::size_t(m.rows()));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return m(a, 2) < m(b, 2); });

    Staircase2D<Scalar> base(r(0), r(1));
    CompensatedSum<Scalar> area;
    CompensatedSum<Scalar> volume;
    Scalar z_prev = 0;
    bool first = true;
    for (Index i : order)
    {
        if (!first)
            volume.add(area.value() * (m(i, 2) - z_prev));
        first = false;
        z_prev = m(i, 2);
        area.add(base.insert(m(i, 0), m(i, 1)));
    }
    if (!first)
        volume.add(area.value() * (r(2) - z_prev));
    return volume.value();
}

template <typename Scalar>
Scalar volume_any(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r);

/// H({p}) - H({p v q : q in rows}); the bounding technique.
template <typename Derived, typename Scalar>
Scalar exclusive_volume(const Eigen::MatrixBase<Derived>& p, const PointMatrixT<Scalar>& others,
                        const PointT<Scalar>& r)
{
    const Scalar own = box_volume(p, r);
    if (own == 0)
        return 0;
    PointMatrixT<Scalar> joins(others.rows(), others.cols());
    for (Index i = 0; i < others.rows(); ++i)
    {
        for (Index j = 0; j < others.cols(); ++j)
            joins(i, j) = std::max(p(j), others(i, j));
        if (same_point(joins.row(i), p))
            return 0;
    }
    joins = positive_boxes(joins, r);
    if (joins.cols() > 3)
        joins = joins(nondominated_rows(joins), Eigen::all).eval();
    const Scalar covered = volume_any(joins, r);
    return std::max(Scalar(0), own - covered);
}

template <typename Scalar>
Scalar volume_4d(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    std::vector<Index> order(std::size_t(m.rows()));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return m(a, 3) < m(b, 3); });

    const PointT<Scalar> r3 = r.head(3);
    PointMatrixT<Scalar> visited(0, 3); // 3D projections not dominated by a later-visited projection
    CompensatedSum<Scalar> base;
    CompensatedSum<Scalar> volume;
    Scalar w_prev = 0;
    bool first = true;
    for (Index i : order)
    {
        if (!first)
            volume.add(base.value() * (m(i, 3) - w_prev));
        first = false;
        w_prev = m(i, 3);

        const PointT<Scalar> p = m.row(i).head(3).transpose();
        const Scalar gained = exclusive_volume(p, visited, r3);
        if (gained <= 0 && box_volume(p, r3) > 0)
        {
            // p* is covered, or exactly repeats a visited projection.
            bool covered = false;
            for (Index k = 0; k < visited.rows() && !covered; ++k)
                covered = weakly_dominates(visited.row(k), p);
            if (covered)
                continue;
        }
        base.add(gained);

        std::vector<Index> keep;
        for (Index k = 0; k < visited.rows(); ++k)
            if (!weakly_dominates(p, visited.row(k)))
                keep.push_back(k);
        PointMatrixT<Scalar> next(Index(keep.size()) + 1, 3);
        for (std::size_t k = 0; k < keep.size(); ++k)
            next.row(Index(k)) = visited.row(keep[k]);
        next.row(Index(keep.size())) = p.transpose();
        visited.swap(next);
    }
    if (!first)
        volume.add(base.value() * (r(3) - w_prev));
    return volume.value();
}

/// Recursive sweep over the last objective; each slice contributes
/// (r_d - p_d) * H(p*, earlier projections).
template <typename Scalar>
Scalar wfg_recursive(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    const Index n = m.rows();
    const Index d = m.cols();
    if (n == 0)
        return 0;
    if (d == 2)
        return area_2d(m, r);

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return m(a, d - 1) < m(b, d - 1); });

    const PointT<Scalar> r_low = r.head(d - 1);
    PointMatrixT<Scalar> projections(n, d - 1);
    for (Index k = 0; k < n; ++k)
        projections.row(k) = m.row(order[std::size_t(k)]).head(d - 1);

    CompensatedSum<Scalar> total;
    for (Index k = 0; k < n; ++k)
    {
        const Scalar height = r(d - 1) - m(order[std::size_t(k)], d - 1);
        if (height <= 0)
            continue;
        const auto p = projections.row(k);
        const Scalar own = box_volume(p, r_low);
        if (own == 0)
            continue;

        PointMatrixT<Scalar> joins(k, d - 1);
        bool covered = false;
        for (Index j = 0; j < k && !covered; ++j)
        {
            for (Index c = 0; c < d - 1; ++c)
                joins(j, c) = std::max(p(c), projections(j, c));
            covered = same_point(joins.row(j), p);
        }
        if (covered)
            continue;
        const PointMatrixT<Scalar> limit = joins(nondominated_rows(joins), Eigen::all);
        const Scalar slice = own - wfg_recursive(limit, r_low);
        if (slice > 0)
            total.add(height * slice);
    }
    return total.value();
}

/// Objective order by descending coordinate variance; ties keep the input order.
template <typename Scalar>
std::vector<Index> variance_order(const PointMatrixT<Scalar>& m)
{
    const Index d = m.cols();
    std::vector<Scalar> variance(std::size_t(d), Scalar(0));
    if (m.rows() > 0)
        for (Index j = 0; j < d; ++j)
        {
            const Scalar mean = m.col(j).mean();
            variance[std::size_t(j)] = (m.col(j).array() - mean).square().mean();
        }
    std::vector<Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return variance[std::size_t(a)] > variance[std::size_t(b)]; });
    return order;
}

template <typename Scalar>
Scalar volume_wfg(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    if (m.cols() == 2)
        return area_2d(m, r);
    const auto order = variance_order(m);
    const PointMatrixT<Scalar> permuted = m(Eigen::all, order);
    const PointT<Scalar> r_perm = r(order);
    const PointMatrixT<Scalar> filtered = permuted(nondominated_rows(permuted), Eigen::all);
    return wfg_recursive(filtered, r_perm);
}

template <typename Scalar>
Scalar volume_any(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r)
{
    switch (m.cols())
    {
    case 2: return area_2d(m, r);
    case 3: return volume_3d(m, r);
    case 4: return volume_4d(m, r);
    default: return volume_wfg(m, r);
    }
}

inline HvAlgorithm dispatch_algorithm(Index d)
{
    switch (d)
    {
    case 2: return HvAlgorithm::dim2;
    case 3: return HvAlgorithm::dim3;
    case 4: return HvAlgorithm::dim4;
    default: return HvAlgorithm::wfg;
    }
}

template <typename Scalar, typename Fn>
HvResultT<Scalar> clipped_run(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, HvAlgorithm id,
                              Fn&& fn)
{
    const auto clipped = validate_front(front, ref, ClipPolicy::clip);
    HvResultT<Scalar> out;
    out.algorithm = id;
    out.n_used = clipped.front.size();
    out.value = fn(clipped.front.matrix(), ref.coords());
    return out;
}

inline void require_dim(Index got, Index want)
{
    if (got != want)
        throw DimensionMismatch("algorithm needs d = " + std::to_string(want) + ", got " + std::to_string(got));
}

} // namespace detail

template <typename Scalar>
HvResultT<Scalar> hv_2d(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_dim(front.dim(), 2);
    return detail::clipped_run(front, ref, HvAlgorithm::dim2,
                               [](const auto& m, const auto& r) { return detail::area_2d<Scalar>(m, r); });
}

template <typename Scalar>
HvResultT<Scalar> hv_3d(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_dim(front.dim(), 3);
    return detail::clipped_run(front, ref, HvAlgorithm::dim3,
                               [](const auto& m, const auto& r) { return detail::volume_3d<Scalar>(m, r); });
}

template <typename Scalar>
HvResultT<Scalar> hv_4d(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_dim(front.dim(), 4);
    return detail::clipped_run(front, ref, HvAlgorithm::dim4,
                               [](const auto& m, const auto& r) { return detail::volume_4d<Scalar>(m, r); });
}

template <typename Scalar>
HvResultT<Scalar> hv_wfg(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(front.dim(), ref.dim());
    return detail::clipped_run(front, ref, HvAlgorithm::wfg,
                               [](const auto& m, const auto& r) { return detail::volume_wfg<Scalar>(m, r); });
}

/// Hypervolume with the dimension-specialized algorithm.
template <typename Scalar>
HvResultT<Scalar> hv(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(front.dim(), ref.dim());
    switch (front.dim())
    {
    case 2: return hv_2d(front, ref);
    case 3: return hv_3d(front, ref);
    case 4: return hv_4d(front, ref);
    default: return hv_wfg(front, ref);
    }
}

/// H(S + p) = H(S) + H(p, S) or H(S - p) = H(S) - H(p, S), from one contribution.
template <typename Derived, typename Scalar>
HvResultT<Scalar> update_hv(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref, Scalar known_hv,
                            const Eigen::MatrixBase<Derived>& p, UpdateMode mode)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_same_dim(front.dim(), p.size());
    detail::require_finite(p, "point");

    std::vector<Index> others;
    Index copies = 0;
    for (Index i = 0; i < front.size(); ++i)
    {
        if (same_point(front.point(i), p))
            ++copies;
        else
            others.push_back(i);
    }
    if (mode == UpdateMode::incremental && copies > 0)
        throw PreconditionViolation("incremental update: point already in the set");
    if (mode == UpdateMode::decremental && copies == 0)
        throw PreconditionViolation("decremental update: point not in the set");

    const PointT<Scalar> point = p;
    const PointMatrixT<Scalar> rest = front.matrix()(others, Eigen::all);
    const Scalar gain = detail::exclusive_volume(point, rest, ref.coords());

    HvResultT<Scalar> out;
    out.algorithm = detail::dispatch_algorithm(front.dim());
    out.value = mode == UpdateMode::incremental ? known_hv + gain : known_hv - gain;
    for (Index i : others)
        if (weakly_dominates(front.point(i), ref.coords()))
            ++out.n_used;
    if (mode == UpdateMode::incremental && weakly_dominates(point, ref.coords()))
        ++out.n_used;
    return out;
}

/// Maximal corners of the search region left by a nondominated front.
template <typename Scalar>
struct LocalUpperBoundSetT
{
    PointMatrixT<Scalar> bounds; ///< one bound per row
    FrontT<Scalar> source;       ///< the points that shaped the region
};

using LocalUpperBoundSet = LocalUpperBoundSetT<double>;

/// Built incrementally from {r}: every bound strongly dominated by a new
/// point p is replaced by its d children (coordinate j lowered to p_j), then
/// non-maximal bounds are discarded. Points on the boundary of the box have
/// no effect on the region and are ignored.
template <typename Scalar>
LocalUpperBoundSetT<Scalar> local_upper_bounds(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(front.dim(), ref.dim());
    const Index d = front.dim();
    std::vector<Index> inside;
    for (Index i = 0; i < front.size(); ++i)
        if (strongly_dominates(front.point(i), ref.coords()))
            inside.push_back(i);
    const FrontT<Scalar> source = front.subset(inside);
    if (!is_nondominated(source.matrix()))
        throw PreconditionViolation("local upper bounds need a nondominated front");

    std::vector<PointT<Scalar>> bounds{ref.coords()};
    for (Index i = 0; i < source.size(); ++i)
    {
        const auto p = source.point(i);
        std::vector<PointT<Scalar>> next;
        std::vector<PointT<Scalar>> children;
        for (const auto& u : bounds)
        {
            if (!strongly_dominates(p, u))
            {
                next.push_back(u);
                continue;
            }
            for (Index j = 0; j < d; ++j)
            {
                PointT<Scalar> child = u;
                child(j) = p(j);
                children.push_back(std::move(child));
            }
        }
        for (auto& c : children)
        {
            bool redundant = false;
            for (const auto& u : next)
                if (weakly_dominates(c, u))
                {
                    redundant = true;
                    break;
                }
            for (const auto& o : children)
                if (!redundant && &o != &c && weakly_dominates(c, o) && !same_point(c, o))
                    redundant = true;
            if (!redundant)
                next.push_back(c);
        }
        bounds.swap(next);
    }

    LocalUpperBoundSetT<Scalar> out;
    out.bounds.resize(Index(bounds.size()), d);
    for (std::size_t k = 0; k < bounds.size(); ++k)
        out.bounds.row(Index(k)) = bounds[k].transpose();
    out.source = source;
    out.source.set_flag(NondominatedFlag::verified);
    return out;
}

} // namespace hvx
