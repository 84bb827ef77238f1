#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flipbraid/rational.hpp"

namespace flipbraid {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Builds from nested rows; all rows must have equal length.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix identity(std::size_t size);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Bounds-checked access.
    const Rational& at(std::size_t r, std::size_t c) const;

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    bool is_identity() const;
    std::string shape() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact product a·b. Throws DimensionError naming both shapes.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Gauss–Jordan inverse with first-nonzero pivoting. Throws SingularMatrixError.
RationalMatrix mat_inverse(const RationalMatrix& a);

Rational trace(const RationalMatrix& a);

/// Sum of each column, in column order.
std::vector<Rational> column_sums(const RationalMatrix& a);

/**
 * Monic characteristic polynomial det(xI - A), highest degree first:
 * {1, c_{k-1}, ..., c_0}. Computed with the Faddeev–LeVerrier recurrence,
 * which is exact over Q. Note c_{k-1} = -trace(A).
 */
std::vector<Rational> char_poly(const RationalMatrix& a);

/// Coordinates of the first entry where a and b differ, or {-1,-1} if equal.
/// Shapes must agree.
std::pair<long, long> first_difference(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace flipbraid
