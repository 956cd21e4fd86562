#pragma once

#include "hvx/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace hvx
{

// Dominance relations (minimization). All accept any Eigen vector expression,
// so rows of a PointMatrix and standalone points mix freely.

template <typename A, typename B>
bool weakly_dominates(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q)
{
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(A);
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(B);
    detail::require_same_dim(p.size(), q.size());
    for (Index i = 0; i < p.size(); ++i)
        if (p(i) > q(i))
            return false;
    return true;
}

template <typename A, typename B>
bool strictly_dominates(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q)
{
    return weakly_dominates(p, q) && !weakly_dominates(q, p);
}

template <typename A, typename B>
bool strongly_dominates(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q)
{
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(A);
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(B);
    detail::require_same_dim(p.size(), q.size());
    for (Index i = 0; i < p.size(); ++i)
        if (!(p(i) < q(i)))
            return false;
    return true;
}

/// Component-wise maximum.
template <typename A, typename B>
PointT<typename A::Scalar> join(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q)
{
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(A);
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(B);
    detail::require_same_dim(p.size(), q.size());
    PointT<typename A::Scalar> out(p.size());
    for (Index i = 0; i < p.size(); ++i)
        out(i) = std::max(p(i), q(i));
    return out;
}

template <typename A, typename B>
bool same_point(const Eigen::MatrixBase<A>& p, const Eigen::MatrixBase<B>& q)
{
    if (p.size() != q.size())
        return false;
    for (Index i = 0; i < p.size(); ++i)
        if (p(i) != q(i))
            return false;
    return true;
}

template <typename Derived>
PointT<typename Derived::Scalar> project_drop_last(const Eigen::MatrixBase<Derived>& p)
{
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived);
    if (p.size() < 3)
        throw InvalidInput("projection needs d >= 3");
    PointT<typename Derived::Scalar> out(p.size() - 1);
    for (Index i = 0; i + 1 < p.size(); ++i)
        out(i) = p(i);
    return out;
}

/// Drops the last objective. Projection can create dominated points, so the flag resets.
template <typename Scalar>
FrontT<Scalar> project_drop_last(const FrontT<Scalar>& front)
{
    if (front.dim() < 3)
        throw InvalidInput("projection needs d >= 3");
    return FrontT<Scalar>(PointMatrixT<Scalar>(front.matrix().leftCols(front.dim() - 1)),
                          NondominatedFlag::unknown);
}

namespace detail
{

template <typename Scalar>
std::vector<Index> lexicographic_order(const PointMatrixT<Scalar>& m)
{
    std::vector<Index> order(std::size_t(m.rows()));
    std::iota(order.begin(), order.end(), Index(0));
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        for (Index j = 0; j < m.cols(); ++j)
        {
            if (m(a, j) < m(b, j))
                return true;
            if (m(b, j) < m(a, j))
                return false;
        }
        return a < b;
    });
    return order;
}

} // namespace detail

/// Rows not weakly dominated by any other distinct row; the first copy of a
/// repeated point survives. Returned in ascending row order.
template <typename Scalar>
std::vector<Index> nondominated_rows(const PointMatrixT<Scalar>& m)
{
    const Index n = m.rows();
    const Index d = m.cols();
    std::vector<Index> kept;
    if (n == 0)
        return kept;

    // Lexicographic order puts every weak dominator (and every earlier
    // duplicate) ahead of the rows it dominates.
    const auto order = detail::lexicographic_order(m);

    if (d == 2)
    {
        bool any = false;
        Scalar best_y = 0;
        for (Index i : order)
            if (!any || m(i, 1) < best_y)
            {
                kept.push_back(i);
                best_y = m(i, 1);
                any = true;
            }
    }
    else if (d == 3)
    {
        // (y -> z) staircase of kept rows; z strictly decreases as y grows.
        std::map<Scalar, Scalar> stairs;
        for (Index i : order)
        {
            const Scalar y = m(i, 1), z = m(i, 2);
            auto it = stairs.upper_bound(y);
            if (it != stairs.begin() && std::prev(it)->second <= z)
                continue;
            it = stairs.lower_bound(y);
            while (it != stairs.end() && it->second >= z)
                it = stairs.erase(it);
            stairs.emplace(y, z);
            kept.push_back(i);
        }
    }
    else
    {
        for (Index i : order)
        {
            bool dominated = false;
            for (Index k : kept)
                if (weakly_dominates(m.row(k), m.row(i)))
                {
                    dominated = true;
                    break;
                }
            if (!dominated)
                kept.push_back(i);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

template <typename Scalar>
std::vector<Index> nondominated_indices(const FrontT<Scalar>& front)
{
    return nondominated_rows(front.matrix());
}

template <typename Scalar>
FrontT<Scalar> nondominated_filter(const FrontT<Scalar>& front)
{
    auto out = front.subset(nondominated_indices(front));
    out.set_flag(NondominatedFlag::verified);
    return out;
}

/// True when no row weakly dominates another distinct row and there are no repeats.
template <typename Scalar>
bool is_nondominated(const PointMatrixT<Scalar>& m)
{
    return Index(nondominated_rows(m).size()) == m.rows();
}

/// Checks nondominance and records the outcome in the front's flag.
template <typename Scalar>
bool verify_nondominated(FrontT<Scalar>& front)
{
    const bool ok = is_nondominated(front.matrix());
    front.set_flag(ok ? NondominatedFlag::verified : NondominatedFlag::violated);
    return ok;
}

} // namespace hvx
