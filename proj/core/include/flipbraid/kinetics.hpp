#pragma once

#include <functional>
#include <span>
#include <vector>

#include "flipbraid/delaunay.hpp"
#include "flipbraid/geometry.hpp"
#include "flipbraid/rational.hpp"

namespace flipbraid {

struct Breakpoint {
    Rational time;
    Point2 position;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear path of one point over [0, 1].
class Trajectory {
public:
    /// Breakpoint times must increase strictly from 0 to 1.
    Trajectory(int index, std::vector<Breakpoint> breakpoints);

    static Trajectory stationary(int index, const Point2& at);

    int index() const noexcept { return index_; }
    const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
    bool is_constant() const;

    /// Exact linear interpolation inside the active segment.
    Point2 position_at(const Rational& t) const;

    /// Same path traversed backwards in time.
    Trajectory reversed() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    int index_;
    std::vector<Breakpoint> breakpoints_;
};

/**
 * One trajectory per configuration point. `base` supplies labels and the
 * boundary; its positions are replaced by the trajectories at each time.
 * Boundary trajectories must be constant and every breakpoint must lie
 * strictly inside the boundary triangle (so, by convexity, every segment does).
 */
class TrajectorySet {
public:
    TrajectorySet(Configuration base, std::vector<Trajectory> trajectories);

    /// Every point held at its base position.
    static TrajectorySet stationary(const Configuration& base);

    const Configuration& base() const noexcept { return base_; }
    const std::vector<Trajectory>& trajectories() const noexcept { return trajectories_; }
    const Trajectory& trajectory(int index) const { return trajectories_.at(static_cast<std::size_t>(index - 1)); }

    TrajectorySet reversed() const;

private:
    Configuration base_;
    std::vector<Trajectory> trajectories_;  // trajectories_[k].index() == k + 1
};

/// Configuration at time t in [0, 1]; throws std::out_of_range otherwise.
Configuration configuration_at(const TrajectorySet& ts, const Rational& t);

/// Runs the sets one after another, each squeezed into an equal share of [0, 1].
/// All sets must share the same base labels and boundary and join continuously.
TrajectorySet concatenate(std::span<const TrajectorySet> parts);

struct FlipSequence {
    std::vector<FlipEvent> events;

    /// Folds the events over `start` with apply_flip.
    Triangulation replay(const Triangulation& start) const;
};

struct KineticOptions {
    Rational step = Rational(1, 64);
    Rational floor = inverse_power_of_two(40);
    int max_jitter_retries = 8;
};

/**
 * Extracts the time-ordered flips of the Delaunay triangulation along the
 * trajectories by certified bisection over exact rational sample times.
 *
 * Adjacent samples with equal triangulations advance; a single diagonal
 * exchange is recorded with the sample interval as its bracket; anything else
 * is bisected. At `floor` width, independent flips (quads sharing at most two
 * points) are recorded in quad order; otherwise KineticsError is thrown.
 * Sample times that land exactly on a degeneracy are jittered by floor/3.
 */
FlipSequence extract_flip_sequence(const TrajectorySet& ts, const KineticOptions& options = {});

/// Delaunay triangulation at t, jittering t inside (lo, hi) by multiples of
/// jitter if the configuration is degenerate. Returns the time actually used.
std::pair<Rational, Triangulation> triangulate_near(const TrajectorySet& ts, const Rational& t, const Rational& lo,
                                                    const Rational& hi, const Rational& jitter, int max_retries);

}  // namespace flipbraid
