#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace hvx
{

using Index = Eigen::Index;

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// One point per row.
template <typename Scalar>
using PointMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Point = PointT<double>;
using PointMatrix = PointMatrixT<double>;

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
  public:
    using Error::Error;
};

class InvalidInput : public Error
{
  public:
    using Error::Error;
};

class PreconditionViolation : public Error
{
  public:
    using Error::Error;
};

class BudgetExceeded : public Error
{
  public:
    using Error::Error;
};

/// Raised by validate_front under the strict policy; carries the first offending row.
class ReferenceViolation : public Error
{
  public:
    ReferenceViolation(const std::string& what, Index index) : Error(what), index_(index) {}
    Index index() const noexcept { return index_; }

  private:
    Index index_;
};

enum class NondominatedFlag
{
    unknown,
    verified,
    violated
};

namespace detail
{

template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& values, const char* what)
{
    for (Index i = 0; i < values.rows(); ++i)
        for (Index j = 0; j < values.cols(); ++j)
            if (!std::isfinite(static_cast<double>(values(i, j))))
                throw InvalidInput(std::string(what) + ": coordinates must be finite");
}

inline void require_same_dim(Index a, Index b)
{
    if (a != b)
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace detail

/// Upper corner of every measured box. Always finite, at least two objectives.
template <typename Scalar>
class ReferencePointT
{
  public:
    ReferencePointT() = default;

    explicit ReferencePointT(PointT<Scalar> coords) : coords_(std::move(coords))
    {
        if (coords_.size() < 2)
            throw InvalidInput("reference point needs at least two coordinates");
        detail::require_finite(coords_, "reference point");
    }

    ReferencePointT(std::initializer_list<Scalar> coords)
        : ReferencePointT(PointT<Scalar>(Eigen::Map<const PointT<Scalar>>(coords.begin(), Index(coords.size()))))
    {
    }

    const PointT<Scalar>& coords() const noexcept { return coords_; }
    Index dim() const noexcept { return coords_.size(); }
    Scalar operator[](Index i) const { return coords_(i); }

  private:
    PointT<Scalar> coords_;
};

/// An ordered point set sharing one dimension, plus what is known about its nondominance.
template <typename Scalar>
class FrontT
{
  public:
    using Matrix = PointMatrixT<Scalar>;
    using ConstRow = typename Matrix::ConstRowXpr;

    FrontT() = default;

    explicit FrontT(Index dim) : points_(0, dim)
    {
        if (dim < 2)
            throw InvalidInput("fronts need at least two objectives");
    }

    explicit FrontT(Matrix points, NondominatedFlag flag = NondominatedFlag::unknown)
        : points_(std::move(points)), flag_(flag)
    {
        if (points_.cols() < 2)
            throw InvalidInput("fronts need at least two objectives");
        detail::require_finite(points_, "front");
    }

    FrontT(std::initializer_list<std::initializer_list<Scalar>> rows)
    {
        if (rows.size() == 0)
            throw InvalidInput("use FrontT(dim) for an empty front");
        const auto dim = Index(rows.begin()->size());
        Matrix m(Index(rows.size()), dim);
        Index i = 0;
        for (const auto& row : rows)
        {
            detail::require_same_dim(dim, Index(row.size()));
            Index j = 0;
            for (Scalar v : row)
                m(i, j++) = v;
            ++i;
        }
        *this = FrontT(std::move(m));
    }

    Index size() const noexcept { return points_.rows(); }
    Index dim() const noexcept { return points_.cols(); }
    bool empty() const noexcept { return points_.rows() == 0; }

    ConstRow point(Index i) const { return points_.row(i); }
    const Matrix& matrix() const noexcept { return points_; }

    NondominatedFlag flag() const noexcept { return flag_; }
    void set_flag(NondominatedFlag flag) noexcept { flag_ = flag; }

    template <typename Derived>
    void push_back(const Eigen::MatrixBase<Derived>& p)
    {
        detail::require_same_dim(dim(), p.size());
        detail::require_finite(p, "point");
        points_.conservativeResize(points_.rows() + 1, Eigen::NoChange);
        for (Index j = 0; j < dim(); ++j)
            points_(points_.rows() - 1, j) = p(j);
        flag_ = NondominatedFlag::unknown;
    }

    /// Rows at `indices`, in that order.
    FrontT subset(const std::vector<Index>& indices) const
    {
        Matrix m(Index(indices.size()), dim());
        for (std::size_t i = 0; i < indices.size(); ++i)
            m.row(Index(i)) = points_.row(indices[i]);
        FrontT out;
        out.points_ = std::move(m);
        out.flag_ = flag_ == NondominatedFlag::verified ? NondominatedFlag::verified : NondominatedFlag::unknown;
        return out;
    }

    /// Copy with row `index` removed.
    FrontT without(Index index) const
    {
        std::vector<Index> keep;
        keep.reserve(std::size_t(size()));
        for (Index i = 0; i < size(); ++i)
            if (i != index)
                keep.push_back(i);
        return subset(keep);
    }

  private:
    Matrix points_;
    NondominatedFlag flag_ = NondominatedFlag::unknown;
};

using Front = FrontT<double>;
using ReferencePoint = ReferencePointT<double>;

template <typename Scalar>
PointT<Scalar> make_point(std::initializer_list<std::type_identity_t<Scalar>> coords)
{
    PointT<Scalar> p = Eigen::Map<const PointT<Scalar>>(coords.begin(), Index(coords.size()));
    if (p.size() < 2)
        throw InvalidInput("points need at least two coordinates");
    detail::require_finite(p, "point");
    return p;
}

inline Point make_point(std::initializer_list<double> coords) { return make_point<double>(coords); }

namespace detail
{

/// Neumaier-compensated accumulator for long slice sums.
template <typename Scalar>
class CompensatedSum
{
  public:
    void add(Scalar x) noexcept
    {
        const Scalar t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    Scalar value() const noexcept { return sum_ + carry_; }

  private:
    Scalar sum_ = 0;
    Scalar carry_ = 0;
};

} // namespace detail

} // namespace hvx
