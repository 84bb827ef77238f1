#pragma once

#include <array>
#include <span>
#include <vector>

#include "flipbraid/rational.hpp"

namespace flipbraid {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// A point of the configuration: 1-based index, exact position, and the
/// rational label that enters the flip-matrix entries.
struct LabeledPoint {
    int index = 0;
    Point2 position;
    Rational zeta;

    friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// Sign of (b - a) x (c - a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// +1 if d is strictly inside the circumcircle of (a, b, c), 0 if on it,
/// -1 if outside. Orientation of (a, b, c) does not matter.
/// Throws DegenerateCircumcircleError when a, b, c are collinear.
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/**
 * The full point state: three fixed boundary vertices plus the mobile
 * interior points, indexed 1..m.
 *
 * Construction checks that indices are exactly 1..m, that ζ labels are
 * pairwise distinct, that the boundary triangle is non-degenerate, and that
 * every interior point lies strictly inside it.
 */
class Configuration {
public:
    Configuration(std::vector<LabeledPoint> points, std::array<int, 3> boundary);

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t interior_count() const noexcept { return points_.size() - 3; }

    const std::vector<LabeledPoint>& points() const noexcept { return points_; }
    const LabeledPoint& point(int index) const { return points_.at(static_cast<std::size_t>(index - 1)); }
    const Point2& position(int index) const { return point(index).position; }
    const Rational& zeta(int index) const { return point(index).zeta; }

    const std::array<int, 3>& boundary() const noexcept { return boundary_; }
    bool is_boundary(int index) const;
    std::vector<int> interior() const;

    /// Same labels and boundary with new positions (indexed like points()).
    /// Validates interior containment again.
    Configuration with_positions(std::span<const Point2> positions) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<LabeledPoint> points_;  // sorted, points_[k].index == k + 1
    std::array<int, 3> boundary_;
};

/// True iff p lies strictly inside the triangle (a, b, c) of either orientation.
bool strictly_inside_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c);

struct GeneralPositionReport {
    std::vector<std::array<int, 4>> offending;  // sorted index 4-tuples

    bool ok() const noexcept { return offending.empty(); }
};

/**
 * Exhaustive O(m^4) check: a 4-subset offends when its points are
 * cocircular and the open circumdisk holds no other configuration point.
 */
GeneralPositionReport validate_general_position(const Configuration& config);

}  // namespace flipbraid
