#pragma once

#include "hvx/hv_exact.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace hvx
{

/// Exclusive contributions, index-aligned with the front they were computed for.
template <typename Scalar>
struct ContributionTableT
{
    std::vector<Scalar> values;
    Scalar total_hv = 0;
};

using ContributionTable = ContributionTableT<double>;

namespace detail
{

template <typename Scalar>
PointMatrixT<Scalar> rows_except(const PointMatrixT<Scalar>& m, std::initializer_list<Index> skip)
{
    std::vector<Index> keep;
    keep.reserve(std::size_t(m.rows()));
    for (Index i = 0; i < m.rows(); ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end())
            keep.push_back(i);
    return m(keep, Eigen::all);
}

template <typename Derived, typename Scalar>
PointMatrixT<Scalar> rows_not_equal(const PointMatrixT<Scalar>& m, const Eigen::MatrixBase<Derived>& p)
{
    std::vector<Index> keep;
    for (Index i = 0; i < m.rows(); ++i)
        if (!same_point(m.row(i), p))
            keep.push_back(i);
    return m(keep, Eigen::all);
}

template <typename Derived, typename Scalar>
Index first_equal(const PointMatrixT<Scalar>& m, const Eigen::MatrixBase<Derived>& p)
{
    for (Index i = 0; i < m.rows(); ++i)
        if (same_point(m.row(i), p))
            return i;
    return -1;
}

/// Volume of [u, r] not dominated by any row of `others`, sweeping the
/// objective `axis` upwards. `order` lists the rows ascending in that
/// objective. Stops once a row covers u in the other two objectives.
template <typename Scalar>
Scalar exclusive_volume_3d_sweep(const PointT<Scalar>& u, const PointMatrixT<Scalar>& others,
                                 const std::vector<Index>& order, const PointT<Scalar>& r, int axis = 2)
{
    const int a = (axis + 1) % 3;
    const int b = (axis + 2) % 3;
    const Scalar base = box_volume(Eigen::Matrix<Scalar, 2, 1>(u(a), u(b)), Eigen::Matrix<Scalar, 2, 1>(r(a), r(b)));
    if (base == 0 || !(u(axis) < r(axis)))
        return 0;

    Staircase2D<Scalar> covered_stairs(r(a), r(b));
    Scalar covered = 0;
    CompensatedSum<Scalar> volume;
    Scalar level = u(axis);
    for (Index i : order)
    {
        const Scalar z = std::max(others(i, axis), u(axis));
        if (z >= r(axis))
            break;
        const Scalar qa = std::max(others(i, a), u(a));
        const Scalar qb = std::max(others(i, b), u(b));
        if (!(qa < r(a) && qb < r(b)))
            continue;
        if (z > level)
        {
            volume.add((base - covered) * (z - level));
            level = z;
        }
        covered += covered_stairs.insert(qa, qb);
        if (qa == u(a) && qb == u(b))
            return volume.value();
    }
    volume.add(std::max(Scalar(0), base - covered) * (r(axis) - level));
    return volume.value();
}

template <typename Scalar>
std::vector<Index> order_along(const PointMatrixT<Scalar>& m, Index axis)
{
    std::vector<Index> order(std::size_t(m.rows()));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return m(x, axis) < m(y, axis); });
    return order;
}

/// Contribution of u to the rows of `others` (all of them), any dimension.
template <typename Scalar>
Scalar contribution_to_rows(const PointT<Scalar>& u, const PointMatrixT<Scalar>& others, const PointT<Scalar>& r)
{
    if (u.size() == 3)
        return exclusive_volume_3d_sweep(u, others, order_along(others, 2), r);
    return exclusive_volume(u, others, r);
}

} // namespace detail

/// H(p, S \ {p}); membership is by value, so every copy of p is set aside.
template <typename Derived, typename Scalar>
Scalar one_contribution(const Eigen::MatrixBase<Derived>& p, const FrontT<Scalar>& front,
                        const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(p.size(), front.dim());
    detail::require_same_dim(p.size(), ref.dim());
    const PointT<Scalar> point = p;
    return detail::contribution_to_rows(point, detail::rows_not_equal(front.matrix(), point), ref.coords());
}

/// Volume dominated by both p and q and by nothing else in S \ {p, q}.
template <typename A, typename B, typename Scalar>
Scalar joint_contribution(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q, const FrontT<Scalar>& front,
                          const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(p.size(), front.dim());
    detail::require_same_dim(q.size(), front.dim());
    detail::require_same_dim(p.size(), ref.dim());
    const PointT<Scalar> u = join(p, q);
    auto rest = detail::rows_not_equal(front.matrix(), p);
    rest = detail::rows_not_equal(rest, q);
    return detail::contribution_to_rows(u, rest, ref.coords());
}

template <typename Scalar>
ContributionTableT<Scalar> all_contributions_2d(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_dim(front.dim(), 2);
    detail::require_same_dim(front.dim(), ref.dim());
    const auto& m = front.matrix();
    const auto& r = ref.coords();

    std::vector<Index> order;
    for (Index i = 0; i < m.rows(); ++i)
        if (strongly_dominates(m.row(i), r))
            order.push_back(i);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (m(a, 0) != m(b, 0))
            return m(a, 0) < m(b, 0);
        if (m(a, 1) != m(b, 1))
            return m(a, 1) < m(b, 1);
        return a < b;
    });

    // Staircase in ascending x. Every other point is covered either by one
    // stair point, inside whose exclusive box it then lies, or by two.
    std::vector<Index> chain;
    std::vector<Index> covered;
    for (Index i : order)
    {
        if (chain.empty() || m(i, 1) < m(chain.back(), 1))
            chain.push_back(i);
        else
            covered.push_back(i);
    }
    std::vector<std::vector<Index>> inner(chain.size());
    for (Index q : covered)
    {
        const auto it = std::upper_bound(chain.begin(), chain.end(), m(q, 0),
                                         [&](Scalar x, Index c) { return x < m(c, 0); });
        const auto owner = std::size_t(it - chain.begin()) - 1;
        if (owner > 0 && m(chain[owner - 1], 1) <= m(q, 1))
            continue;
        inner[owner].push_back(q);
    }

    ContributionTableT<Scalar> table;
    table.values.assign(std::size_t(m.rows()), Scalar(0));
    detail::CompensatedSum<Scalar> total;
    for (std::size_t k = 0; k < chain.size(); ++k)
    {
        const Index i = chain[k];
        const Scalar right = k + 1 < chain.size() ? m(chain[k + 1], 0) : r(0);
        const Scalar above = k > 0 ? m(chain[k - 1], 1) : r(1);
        total.add((r(0) - m(i, 0)) * (above - m(i, 1)));
        // Exclusive box minus whatever its inner points still cover (already in x order).
        Scalar area = 0;
        Scalar cur_x = m(i, 0), cur_y = above;
        for (Index q : inner[k])
        {
            if (m(q, 1) >= cur_y)
                continue;
            area += (m(q, 0) - cur_x) * (cur_y - m(i, 1));
            cur_x = m(q, 0);
            cur_y = m(q, 1);
        }
        area += (right - cur_x) * (cur_y - m(i, 1));
        table.values[std::size_t(i)] = area;
    }
    table.total_hv = total.value();
    return table;
}

/// Three-dimensional contributions by a single sweep in ascending z.
///
/// The active list holds the visited points whose (x, y) projections are
/// mutually nondominated. Each active point owns the box between its two
/// neighbours and a staircase of inner points (visited points inside that
/// box dominated by it alone); its current exclusive area is the box minus
/// the staircase. Volume is settled lazily whenever that area changes, and a
/// point's contribution is final once its projection is dominated.
template <typename Scalar>
ContributionTableT<Scalar> all_contributions_3d(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_dim(front.dim(), 3);
    detail::require_same_dim(front.dim(), ref.dim());
    const auto& m = front.matrix();
    const auto& r = ref.coords();

    struct Active
    {
        Scalar y;
        Index row;
        Scalar area = 0;
        Scalar z_last = 0;
        Scalar volume = 0;
        std::map<Scalar, Scalar> inner; // x -> y, y strictly decreasing
    };
    using ActiveMap = std::map<Scalar, Active>; // keyed by x
    using Iter = typename ActiveMap::iterator;

    ContributionTableT<Scalar> table;
    table.values.assign(std::size_t(m.rows()), Scalar(0));

    std::vector<Index> order;
    for (Index i = 0; i < m.rows(); ++i)
        if (strongly_dominates(m.row(i), r))
            order.push_back(i);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (m(a, 2) != m(b, 2))
            return m(a, 2) < m(b, 2);
        if (m(a, 1) != m(b, 1))
            return m(a, 1) < m(b, 1);
        if (m(a, 0) != m(b, 0))
            return m(a, 0) < m(b, 0);
        return a < b;
    });

    ActiveMap active;
    detail::Staircase2D<Scalar> base(r(0), r(1));
    detail::CompensatedSum<Scalar> base_area;
    detail::CompensatedSum<Scalar> total;
    Scalar z_prev = 0;
    bool first = true;

    const auto settle = [](Active& a, Scalar z) {
        a.volume += a.area * (z - a.z_last);
        a.z_last = z;
    };
    // Clips the inner staircase to the current box and recomputes the exclusive area.
    const auto refresh = [&](Iter it) {
        const Scalar x0 = it->first;
        Active& a = it->second;
        const Scalar right = std::next(it) == active.end() ? r(0) : std::next(it)->first;
        const Scalar top = it == active.begin() ? r(1) : std::prev(it)->second.y;
        auto& in = a.inner;
        while (!in.empty() && in.begin()->second >= top)
            in.erase(in.begin());
        while (!in.empty() && std::prev(in.end())->first >= right)
            in.erase(std::prev(in.end()));
        Scalar area = 0;
        Scalar cur_x = x0;
        Scalar cur_y = top;
        for (const auto& [ix, iy] : in)
        {
            area += (ix - cur_x) * (cur_y - a.y);
            cur_x = ix;
            cur_y = iy;
        }
        area += (right - cur_x) * (cur_y - a.y);
        a.area = area;
    };

    for (Index i : order)
    {
        const Scalar x = m(i, 0), y = m(i, 1), z = m(i, 2);
        if (!first)
            total.add(base_area.value() * (z - z_prev));
        first = false;
        z_prev = z;
        base_area.add(base.insert(x, y));

        auto it = active.upper_bound(x);
        if (it != active.begin() && std::prev(it)->second.y <= y)
        {
            const Iter owner = std::prev(it);
            if (owner != active.begin() && std::prev(owner)->second.y <= y)
                continue; // covered by two active points: touches no exclusive region
            Active& a = owner->second;
            auto& in = a.inner;
            auto up = in.upper_bound(x);
            if (up != in.begin() && std::prev(up)->second <= y)
                continue;
            settle(a, z);
            auto lo = in.lower_bound(x);
            while (lo != in.end() && lo->second >= y)
                lo = in.erase(lo);
            in.emplace_hint(lo, x, y);
            refresh(owner);
            continue;
        }

        Active fresh;
        fresh.y = y;
        fresh.row = i;
        fresh.z_last = z;
        auto jt = active.lower_bound(x);
        while (jt != active.end() && jt->second.y >= y)
        {
            settle(jt->second, z);
            table.values[std::size_t(jt->second.row)] = jt->second.volume;
            fresh.inner.emplace_hint(fresh.inner.end(), jt->first, jt->second.y);
            jt = active.erase(jt);
        }
        const Iter placed = active.emplace_hint(jt, x, std::move(fresh));
        refresh(placed);
        if (placed != active.begin())
        {
            settle(std::prev(placed)->second, z);
            refresh(std::prev(placed));
        }
        if (std::next(placed) != active.end())
        {
            settle(std::next(placed)->second, z);
            refresh(std::next(placed));
        }
    }
    if (!first)
        total.add(base_area.value() * (r(2) - z_prev));
    for (auto& [x, a] : active)
    {
        settle(a, r(2));
        table.values[std::size_t(a.row)] = a.volume;
    }
    table.total_hv = total.value();
    return table;
}

/// Contributions of every point; removal is by row, so repeated points get zero.
template <typename Scalar>
ContributionTableT<Scalar> all_contributions(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    detail::require_same_dim(front.dim(), ref.dim());
    if (front.dim() == 2)
        return all_contributions_2d(front, ref);
    if (front.dim() == 3)
        return all_contributions_3d(front, ref);

    ContributionTableT<Scalar> table;
    table.values.resize(std::size_t(front.size()));
    const auto& m = front.matrix();
    for (Index i = 0; i < front.size(); ++i)
    {
        const PointT<Scalar> p = m.row(i).transpose();
        table.values[std::size_t(i)] = detail::exclusive_volume(p, detail::rows_except(m, {i}), ref.coords());
    }
    table.total_hv = hv(front, ref).value;
    return table;
}

/// (index, contribution) of a least contributor; lowest index on ties.
template <typename Scalar>
std::pair<Index, Scalar> least_contributor(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    if (front.empty())
        throw PreconditionViolation("least contributor of an empty front");
    const auto table = all_contributions(front, ref);
    const auto it = std::min_element(table.values.begin(), table.values.end());
    return {Index(it - table.values.begin()), *it};
}

namespace detail
{

template <typename Scalar>
bool staircase_fast_path(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref)
{
    if (front.dim() != 2)
        return false;
    for (Index i = 0; i < front.size(); ++i)
        if (!strongly_dominates(front.point(i), ref.coords()))
            return false;
    return is_nondominated(front.matrix());
}

/// Box bounds of row i in a 2D staircase: next larger x, next larger y.
template <typename Scalar>
std::pair<Scalar, Scalar> staircase_box(const PointMatrixT<Scalar>& m, Index i, const PointT<Scalar>& r,
                                        Index skip = -1)
{
    Scalar right = r(0), top = r(1);
    for (Index k = 0; k < m.rows(); ++k)
    {
        if (k == i || k == skip)
            continue;
        if (m(k, 0) > m(i, 0))
            right = std::min(right, m(k, 0));
        if (m(k, 1) > m(i, 1))
            top = std::min(top, m(k, 1));
    }
    return {right, top};
}

/// Incremental update on a nondominated 2D staircase: only p's delimiters change.
template <typename Scalar>
ContributionTableT<Scalar> staircase_insert(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r,
                                            ContributionTableT<Scalar> table, const PointT<Scalar>& p)
{
    const Index n = m.rows();
    table.values.push_back(0);
    if (!strongly_dominates(p, r))
        return table;

    std::vector<Index> dominators, covered;
    for (Index k = 0; k < n; ++k)
    {
        if (weakly_dominates(m.row(k), p))
            dominators.push_back(k);
        else if (weakly_dominates(p, m.row(k)))
            covered.push_back(k);
    }
    if (!dominators.empty())
    {
        if (dominators.size() == 1)
        {
            // p is an inner delimiter of its only dominator.
            const Index q = dominators.front();
            const auto [right, top] = staircase_box(m, q, r);
            const Scalar lost = std::max(Scalar(0), right - p(0)) * std::max(Scalar(0), top - p(1));
            auto& v = table.values[std::size_t(q)];
            v = std::max(Scalar(0), v - lost);
        }
        return table;
    }

    Index left = -1, right = -1;
    for (Index k = 0; k < n; ++k)
    {
        if (std::find(covered.begin(), covered.end(), k) != covered.end())
            continue;
        if (m(k, 0) < p(0) && (left < 0 || m(k, 0) > m(left, 0)))
            left = k;
        if (m(k, 0) > p(0) && (right < 0 || m(k, 0) < m(right, 0)))
            right = k;
    }
    const Scalar top = left >= 0 ? m(left, 1) : r(1);
    const Scalar edge = right >= 0 ? m(right, 0) : r(0);

    std::sort(covered.begin(), covered.end(), [&](Index a, Index b) { return m(a, 0) < m(b, 0); });
    Scalar gained = 0;
    Scalar cur_x = p(0), cur_y = top;
    for (Index k : covered)
    {
        gained += (m(k, 0) - cur_x) * (cur_y - p(1));
        cur_x = m(k, 0);
        cur_y = m(k, 1);
        table.values[std::size_t(k)] = 0;
    }
    gained += (edge - cur_x) * (cur_y - p(1));
    table.values.back() = gained;
    table.total_hv += gained;

    if (left >= 0)
    {
        const auto [unused, left_top] = staircase_box(m, left, r);
        (void)unused;
        table.values[std::size_t(left)] = (p(0) - m(left, 0)) * (left_top - m(left, 1));
    }
    if (right >= 0)
    {
        const auto [right_edge, unused] = staircase_box(m, right, r);
        (void)unused;
        table.values[std::size_t(right)] = (right_edge - m(right, 0)) * (p(1) - m(right, 1));
    }
    return table;
}

/// Decremental update on a nondominated 2D staircase.
template <typename Scalar>
ContributionTableT<Scalar> staircase_remove(const PointMatrixT<Scalar>& m, const PointT<Scalar>& r,
                                            const ContributionTableT<Scalar>& table, Index removed)
{
    Index left = -1, right = -1;
    for (Index k = 0; k < m.rows(); ++k)
    {
        if (k == removed)
            continue;
        if (m(k, 0) < m(removed, 0) && (left < 0 || m(k, 0) > m(left, 0)))
            left = k;
        if (m(k, 0) > m(removed, 0) && (right < 0 || m(k, 0) < m(right, 0)))
            right = k;
    }
    ContributionTableT<Scalar> out;
    out.total_hv = table.total_hv - table.values[std::size_t(removed)];
    for (Index k = 0; k < m.rows(); ++k)
        if (k != removed)
            out.values.push_back(table.values[std::size_t(k)]);
    const auto shifted = [&](Index k) { return std::size_t(k < removed ? k : k - 1); };
    if (left >= 0)
    {
        const auto [unused, left_top] = staircase_box(m, left, r, removed);
        (void)unused;
        const Scalar edge = right >= 0 ? m(right, 0) : r(0);
        out.values[shifted(left)] = (edge - m(left, 0)) * (left_top - m(left, 1));
    }
    if (right >= 0)
    {
        const auto [right_edge, unused] = staircase_box(m, right, r, removed);
        (void)unused;
        const Scalar top = left >= 0 ? m(left, 1) : r(1);
        out.values[shifted(right)] = (right_edge - m(right, 0)) * (top - m(right, 1));
    }
    return out;
}

} // namespace detail

/// Contributions after adding p (appended last) or removing the first copy of p.
///
/// Each surviving entry moves by the joint contribution H(p, q, .). A
/// nondominated 2D front takes the staircase path, which only rewrites p's
/// delimiters and the points p covers.
template <typename Derived, typename Scalar>
ContributionTableT<Scalar> update_all_contributions(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                                                    const ContributionTableT<Scalar>& table,
                                                    const Eigen::MatrixBase<Derived>& p, UpdateMode mode)
{
    detail::require_same_dim(front.dim(), ref.dim());
    detail::require_same_dim(front.dim(), p.size());
    detail::require_finite(p, "point");
    if (Index(table.values.size()) != front.size())
        throw PreconditionViolation("contribution table does not match the front");

    const PointT<Scalar> point = p;
    const auto& m = front.matrix();
    const auto& r = ref.coords();
    const Index at = detail::first_equal(m, point);
    if (mode == UpdateMode::incremental && at >= 0)
        throw PreconditionViolation("incremental update: point already in the set");
    if (mode == UpdateMode::decremental && at < 0)
        throw PreconditionViolation("decremental update: point not in the set");

    if (detail::staircase_fast_path(front, ref))
    {
        if (mode == UpdateMode::incremental)
            return detail::staircase_insert(m, r, table, point);
        return detail::staircase_remove(m, r, table, at);
    }

    ContributionTableT<Scalar> out;
    if (mode == UpdateMode::incremental)
    {
        for (Index i = 0; i < m.rows(); ++i)
        {
            const PointT<Scalar> u = join(point, m.row(i));
            const Scalar shared = detail::exclusive_volume(u, detail::rows_except(m, {i}), r);
            out.values.push_back(std::max(Scalar(0), table.values[std::size_t(i)] - shared));
        }
        const Scalar gained = detail::contribution_to_rows(point, m, r);
        out.values.push_back(gained);
        out.total_hv = table.total_hv + gained;
        return out;
    }

    for (Index i = 0; i < m.rows(); ++i)
    {
        if (i == at)
            continue;
        const PointT<Scalar> u = join(point, m.row(i));
        const Scalar shared = detail::exclusive_volume(u, detail::rows_except(m, {i, at}), r);
        out.values.push_back(table.values[std::size_t(i)] + shared);
    }
    out.total_hv = table.total_hv - table.values[std::size_t(at)];
    return out;
}

/// Contributions H(s, R) of candidate points s to an accepted set R, kept
/// current while points enter or leave R.
///
/// When d <= 3 and candidates plus accepted points are mutually
/// nondominated the specialized paths apply: a merged staircase sweep in
/// 2D, and in 3D one sweep per octant of p along the splitting objective.
/// Otherwise each entry is corrected through joint contributions.
template <typename Scalar>
class TwoSetContributionStateT
{
  public:
    TwoSetContributionStateT(FrontT<Scalar> candidates, FrontT<Scalar> accepted, ReferencePointT<Scalar> ref)
        : candidates_(std::move(candidates)), accepted_(std::move(accepted)), ref_(std::move(ref))
    {
        detail::require_same_dim(candidates_.dim(), accepted_.dim());
        detail::require_same_dim(candidates_.dim(), ref_.dim());
        PointMatrixT<Scalar> pool(candidates_.size() + accepted_.size(), candidates_.dim());
        pool << candidates_.matrix(), accepted_.matrix();
        specialized_ = candidates_.dim() <= 3 && is_nondominated(pool);
        contributions_.resize(std::size_t(candidates_.size()));
        for (Index i = 0; i < candidates_.size(); ++i)
        {
            const PointT<Scalar> s = candidates_.point(i).transpose();
            contributions_[std::size_t(i)] = detail::contribution_to_rows(s, accepted_.matrix(), ref_.coords());
        }
        if (dim() == 2)
            rebuild_orders();
    }

    const FrontT<Scalar>& candidates() const noexcept { return candidates_; }
    const FrontT<Scalar>& accepted() const noexcept { return accepted_; }
    const std::vector<Scalar>& contributions() const noexcept { return contributions_; }
    const ReferencePointT<Scalar>& ref() const noexcept { return ref_; }
    Index dim() const noexcept { return candidates_.dim(); }
    bool specialized() const noexcept { return specialized_; }

    /// Drops candidate i and its entry.
    void erase_candidate(Index i)
    {
        candidates_ = candidates_.without(i);
        contributions_.erase(contributions_.begin() + i);
        if (dim() == 2)
            rebuild_orders();
    }

    template <typename Derived>
    void add_accepted(const Eigen::MatrixBase<Derived>& p)
    {
        const PointT<Scalar> point = p;
        check_point(point);
        if (detail::first_equal(candidates_.matrix(), point) >= 0 || detail::first_equal(accepted_.matrix(), point) >= 0)
            throw PreconditionViolation("incremental two-set update: point already present");
        if (specialized_)
            for (const auto* m : {&candidates_.matrix(), &accepted_.matrix()})
                for (Index i = 0; i < m->rows(); ++i)
                    if (weakly_dominates(m->row(i), point) || weakly_dominates(point, m->row(i)))
                        throw PreconditionViolation("two-set update: point breaks nondominance of the pool");

        if (specialized_ && dim() == 2)
        {
            accepted_.push_back(point);
            rebuild_orders();
            sweep_2d();
            return;
        }
        if (specialized_ && dim() == 3)
            correct_3d(point, accepted_.matrix(), -1);
        else
            correct_generic(point, accepted_.matrix(), -1);
        accepted_.push_back(point);
    }

    template <typename Derived>
    void remove_accepted(const Eigen::MatrixBase<Derived>& p)
    {
        const PointT<Scalar> point = p;
        check_point(point);
        const Index at = detail::first_equal(accepted_.matrix(), point);
        if (at < 0)
            throw PreconditionViolation("decremental two-set update: point not accepted");
        if (detail::first_equal(candidates_.matrix(), point) >= 0)
            throw PreconditionViolation("decremental two-set update: point is also a candidate");

        const PointMatrixT<Scalar> rest = detail::rows_except(accepted_.matrix(), {at});
        if (specialized_ && dim() == 2)
        {
            accepted_ = accepted_.without(at);
            rebuild_orders();
            sweep_2d();
            return;
        }
        if (specialized_ && dim() == 3)
            correct_3d(point, rest, +1);
        else
            correct_generic(point, rest, +1);
        accepted_ = accepted_.without(at);
    }

  private:
    void check_point(const PointT<Scalar>& p) const
    {
        detail::require_same_dim(p.size(), dim());
        detail::require_finite(p, "point");
    }

    // H(s, R -/+ p) = H(s, R) -/+ H(s, p, R \ {p}) for every candidate s.
    void correct_generic(const PointT<Scalar>& p, const PointMatrixT<Scalar>& rest, int sign)
    {
        for (Index i = 0; i < candidates_.size(); ++i)
        {
            const PointT<Scalar> u = join(p, candidates_.point(i));
            const Scalar shared = detail::contribution_to_rows(u, rest, ref_.coords());
            apply(i, sign * shared);
        }
    }

    // Each candidate lies in one octant around p: comparable with p in two
    // objectives and split by the third. The joint region is swept along
    // that splitting objective, using the accepted points pre-sorted on it.
    void correct_3d(const PointT<Scalar>& p, const PointMatrixT<Scalar>& rest, int sign)
    {
        const std::array<std::vector<Index>, 3> sorted{detail::order_along(rest, 0), detail::order_along(rest, 1),
                                                       detail::order_along(rest, 2)};
        for (Index i = 0; i < candidates_.size(); ++i)
        {
            const auto s = candidates_.point(i);
            int split = -1;
            for (int axis : {2, 0, 1})
            {
                const int a = (axis + 1) % 3, b = (axis + 2) % 3;
                const bool below = s(a) >= p(a) && s(b) >= p(b) && s(axis) < p(axis);
                const bool above = s(a) <= p(a) && s(b) <= p(b) && s(axis) > p(axis);
                if (below || above)
                {
                    split = axis;
                    break;
                }
            }
            if (split < 0)
                throw PreconditionViolation("two-set update: candidate comparable with the updated point");
            const PointT<Scalar> u = join(p, s);
            const Scalar shared =
                detail::exclusive_volume_3d_sweep(u, rest, sorted[std::size_t(split)], ref_.coords(), split);
            apply(i, sign * shared);
        }
    }

    void apply(Index i, Scalar delta)
    {
        auto& v = contributions_[std::size_t(i)];
        v = std::max(Scalar(0), v + delta);
    }

    void rebuild_orders()
    {
        cand_order_ = detail::order_along(candidates_.matrix(), 0);
        acc_order_ = detail::order_along(accepted_.matrix(), 0);
    }

    // Every contribution is a box between the accepted neighbours in x.
    void sweep_2d()
    {
        const auto& c = candidates_.matrix();
        const auto& a = accepted_.matrix();
        const auto& r = ref_.coords();
        std::size_t next = 0;
        for (Index i : cand_order_)
        {
            while (next < acc_order_.size() && a(acc_order_[next], 0) < c(i, 0))
                ++next;
            const Scalar top = next == 0 ? r(1) : a(acc_order_[next - 1], 1);
            const Scalar right = next < acc_order_.size() ? a(acc_order_[next], 0) : r(0);
            contributions_[std::size_t(i)] =
                std::max(Scalar(0), right - c(i, 0)) * std::max(Scalar(0), top - c(i, 1));
        }
    }

    FrontT<Scalar> candidates_;
    FrontT<Scalar> accepted_;
    ReferencePointT<Scalar> ref_;
    std::vector<Scalar> contributions_;
    bool specialized_ = false;
    std::vector<Index> cand_order_;
    std::vector<Index> acc_order_;
};

using TwoSetContributionState = TwoSetContributionStateT<double>;

template <typename Derived, typename Scalar>
TwoSetContributionStateT<Scalar> update_all_contributions_2set(TwoSetContributionStateT<Scalar> state,
                                                               const Eigen::MatrixBase<Derived>& p, UpdateMode mode)
{
    if (mode == UpdateMode::incremental)
        state.add_accepted(p);
    else
        state.remove_accepted(p);
    return state;
}

} // namespace hvx
