#pragma once

#include "hvx/dominance.hpp"

#include <string>
#include <vector>

namespace hvx
{

/// Delimiters of the contribution of a point p to a set S.
///
/// `joined` is J = nondominated{p v q : q in S, q != p}, the smallest set
/// weakly dominated by p that bounds its contribution, so that
/// H(p, S) = H({p}) - H(J). `inner` lists delimiters weakly dominated by p;
/// `outer` lists delimiters of p's contribution to {s in S : not p <= s}.
/// An outer delimiter need not be a proper delimiter when p shares a
/// coordinate with a point of S.
template <typename Scalar>
struct DelimiterSetT
{
    std::vector<Index> inner;
    std::vector<Index> outer;
    FrontT<Scalar> joined;
};

using DelimiterSet = DelimiterSetT<double>;

namespace detail
{

/// Rows of `m` (restricted to `rows`) joined with p.
template <typename Derived, typename Scalar>
PointMatrixT<Scalar> joins_with(const Eigen::MatrixBase<Derived>& p, const PointMatrixT<Scalar>& m,
                                const std::vector<Index>& rows)
{
    PointMatrixT<Scalar> out(Index(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            out(Index(i), j) = std::max(p(j), m(rows[i], j));
    return out;
}

/// Indices (into `rows`) whose join with p belongs to the nondominated join set.
template <typename Scalar>
std::vector<std::size_t> surviving_joins(const PointMatrixT<Scalar>& joins, const std::vector<Index>& nd)
{
    std::vector<std::size_t> out;
    for (Index i = 0; i < joins.rows(); ++i)
    {
        bool beaten = false;
        for (Index k : nd)
            if (weakly_dominates(joins.row(k), joins.row(i)) && !same_point(joins.row(k), joins.row(i)))
            {
                beaten = true;
                break;
            }
        if (!beaten)
            out.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

} // namespace detail

template <typename Derived, typename Scalar>
DelimiterSetT<Scalar> bound_and_filter(const Eigen::MatrixBase<Derived>& p, const FrontT<Scalar>& front)
{
    detail::require_same_dim(p.size(), front.dim());
    const auto& m = front.matrix();

    std::vector<Index> others;
    std::vector<Index> outside; // rows not weakly dominated by p
    for (Index i = 0; i < m.rows(); ++i)
    {
        if (same_point(p, m.row(i)))
            continue;
        others.push_back(i);
        if (!weakly_dominates(p, m.row(i)))
            outside.push_back(i);
    }

    DelimiterSetT<Scalar> result;
    const auto joins = detail::joins_with(p, m, others);
    const auto nd = nondominated_rows(joins);
    result.joined = FrontT<Scalar>(PointMatrixT<Scalar>(joins(nd, Eigen::all)), NondominatedFlag::verified);

    for (std::size_t i : detail::surviving_joins(joins, nd))
        if (weakly_dominates(p, m.row(others[i])))
            result.inner.push_back(others[i]);

    const auto outer_joins = detail::joins_with(p, m, outside);
    const auto outer_nd = nondominated_rows(outer_joins);
    for (std::size_t i : detail::surviving_joins(outer_joins, outer_nd))
        result.outer.push_back(outside[i]);
    return result;
}

enum class ClipPolicy
{
    clip,  ///< drop points that do not weakly dominate r
    strict ///< every point must strongly dominate r
};

template <typename Scalar>
struct ValidatedFrontT
{
    FrontT<Scalar> front;
    std::vector<Index> kept; ///< input row of each output row
    Index dropped = 0;
};

template <typename Scalar>
ValidatedFrontT<Scalar> validate_front(const FrontT<Scalar>& front, const ReferencePointT<Scalar>& ref,
                                       ClipPolicy policy = ClipPolicy::clip)
{
    detail::require_same_dim(front.dim(), ref.dim());
    ValidatedFrontT<Scalar> out;
    for (Index i = 0; i < front.size(); ++i)
    {
        if (policy == ClipPolicy::strict)
        {
            if (!strongly_dominates(front.point(i), ref.coords()))
                throw ReferenceViolation("point " + std::to_string(i) + " does not strongly dominate the reference point",
                                         i);
            out.kept.push_back(i);
        }
        else if (weakly_dominates(front.point(i), ref.coords()))
            out.kept.push_back(i);
    }
    out.dropped = front.size() - Index(out.kept.size());
    out.front = front.subset(out.kept);
    return out;
}

} // namespace hvx
