#include "flipbraid/kinetics.hpp"

#include <algorithm>
#include <stdexcept>

#include "flipbraid/errors.hpp"

namespace flipbraid {

Trajectory::Trajectory(int index, std::vector<Breakpoint> breakpoints)
    : index_(index), breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.empty()) throw std::invalid_argument("trajectory without breakpoints");
    if (breakpoints_.front().time != Rational(0) || breakpoints_.back().time != Rational(1))
        throw std::invalid_argument("trajectory of point " + std::to_string(index_) + " must span [0, 1]");
    if (breakpoints_.size() < 2) throw std::invalid_argument("trajectory needs breakpoints at 0 and 1");
    for (std::size_t s = 1; s < breakpoints_.size(); ++s) {
        if (!(breakpoints_[s - 1].time < breakpoints_[s].time))
            throw std::invalid_argument("trajectory times must increase strictly (point " + std::to_string(index_) + ")");
    }
}

Trajectory Trajectory::stationary(int index, const Point2& at) {
    return Trajectory(index, {{Rational(0), at}, {Rational(1), at}});
}

bool Trajectory::is_constant() const {
    return std::all_of(breakpoints_.begin(), breakpoints_.end(),
                       [&](const Breakpoint& b) { return b.position == breakpoints_.front().position; });
}

Point2 Trajectory::position_at(const Rational& t) const {
    if (t < Rational(0) || t > Rational(1)) throw std::out_of_range("time " + t.to_string() + " outside [0, 1]");
    auto upper = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t,
                                  [](const Breakpoint& b, const Rational& v) { return b.time < v; });
    if (upper->time == t) return upper->position;
    const Breakpoint& lo = *(upper - 1);
    const Breakpoint& hi = *upper;
    const Rational u = (t - lo.time) / (hi.time - lo.time);
    return Point2{lo.position.x + u * (hi.position.x - lo.position.x),
                  lo.position.y + u * (hi.position.y - lo.position.y)};
}

Trajectory Trajectory::reversed() const {
    std::vector<Breakpoint> out;
    out.reserve(breakpoints_.size());
    for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it)
        out.push_back({Rational(1) - it->time, it->position});
    return Trajectory(index_, std::move(out));
}

TrajectorySet::TrajectorySet(Configuration base, std::vector<Trajectory> trajectories)
    : base_(std::move(base)), trajectories_(std::move(trajectories)) {
    std::sort(trajectories_.begin(), trajectories_.end(),
              [](const Trajectory& a, const Trajectory& b) { return a.index() < b.index(); });
    if (trajectories_.size() != base_.size())
        throw std::invalid_argument("need exactly one trajectory per point (" + std::to_string(base_.size()) + ")");
    for (std::size_t k = 0; k < trajectories_.size(); ++k) {
        if (trajectories_[k].index() != static_cast<int>(k + 1))
            throw std::invalid_argument("trajectory indices must be exactly 1.." + std::to_string(base_.size()));
    }
    const auto& bd = base_.boundary();
    for (const auto& tr : trajectories_) {
        if (base_.is_boundary(tr.index())) {
            if (!tr.is_constant() || tr.breakpoints().front().position != base_.position(tr.index()))
                throw ConfigurationError("boundary point " + std::to_string(tr.index()) + " must stay fixed");
            continue;
        }
        for (const auto& bp : tr.breakpoints()) {
            if (!strictly_inside_triangle(bp.position, base_.position(bd[0]), base_.position(bd[1]),
                                          base_.position(bd[2])))
                throw ConfigurationError("trajectory of point " + std::to_string(tr.index()) +
                                         " leaves the boundary triangle at t=" + bp.time.to_string());
        }
    }
}

TrajectorySet TrajectorySet::stationary(const Configuration& base) {
    std::vector<Trajectory> out;
    for (const auto& p : base.points()) out.push_back(Trajectory::stationary(p.index, p.position));
    return TrajectorySet(base, std::move(out));
}

TrajectorySet TrajectorySet::reversed() const {
    std::vector<Trajectory> out;
    out.reserve(trajectories_.size());
    for (const auto& tr : trajectories_) out.push_back(tr.reversed());
    std::vector<Point2> start;
    for (const auto& tr : out) start.push_back(tr.breakpoints().front().position);
    return TrajectorySet(base_.with_positions(start), std::move(out));
}

Configuration configuration_at(const TrajectorySet& ts, const Rational& t) {
    std::vector<Point2> positions;
    positions.reserve(ts.trajectories().size());
    for (const auto& tr : ts.trajectories()) positions.push_back(tr.position_at(t));
    return ts.base().with_positions(positions);
}

TrajectorySet concatenate(std::span<const TrajectorySet> parts) {
    if (parts.empty()) throw std::invalid_argument("nothing to concatenate");
    if (parts.size() == 1) return parts.front();
    const auto count = static_cast<long>(parts.size());
    const std::size_t m = parts.front().base().size();
    std::vector<std::vector<Breakpoint>> merged(m);
    for (long p = 0; p < count; ++p) {
        const TrajectorySet& part = parts[static_cast<std::size_t>(p)];
        if (part.base().size() != m || part.base().boundary() != parts.front().base().boundary())
            throw std::invalid_argument("concatenated trajectory sets must share points and boundary");
        for (std::size_t k = 0; k < m; ++k) {
            if (part.base().point(static_cast<int>(k + 1)).zeta != parts.front().base().point(static_cast<int>(k + 1)).zeta)
                throw std::invalid_argument("concatenated trajectory sets must share labels");
            auto& out = merged[k];
            for (const auto& bp : part.trajectories()[k].breakpoints()) {
                Breakpoint scaled{(Rational(p) + bp.time) / Rational(count), bp.position};
                if (!out.empty() && out.back().time == scaled.time) {
                    if (out.back().position != scaled.position)
                        throw std::invalid_argument("trajectory sets do not join continuously");
                    continue;
                }
                out.push_back(std::move(scaled));
            }
        }
    }
    std::vector<Trajectory> trajectories;
    for (std::size_t k = 0; k < m; ++k) trajectories.emplace_back(static_cast<int>(k + 1), std::move(merged[k]));
    return TrajectorySet(parts.front().base(), std::move(trajectories));
}

Triangulation FlipSequence::replay(const Triangulation& start) const {
    Triangulation t = start;
    for (const auto& e : events) t = apply_flip(t, e);
    return t;
}

std::pair<Rational, Triangulation> triangulate_near(const TrajectorySet& ts, const Rational& t, const Rational& lo,
                                                    const Rational& hi, const Rational& jitter, int max_retries) {
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        // 0, +1, -1, +2, -2, ... multiples of the jitter
        const long magnitude = (attempt + 1) / 2;
        const long sign = attempt % 2 == 1 ? 1 : -1;
        const Rational sample = t + Rational(sign * magnitude) * jitter;
        if (attempt > 0 && !(lo < sample && sample < hi)) continue;
        try {
            return {sample, build_delaunay(configuration_at(ts, sample))};
        } catch (const DegenerateConfigurationError&) {
        }
    }
    throw KineticsError("sample time " + t.to_string() + " stays degenerate after " + std::to_string(max_retries) +
                        " jitter retries");
}

namespace {

class Extractor {
public:
    Extractor(const TrajectorySet& ts, const KineticOptions& options) : ts_(ts), options_(options) {}

    void refine(const Rational& a, const Triangulation& ta, const Rational& b, const Triangulation& tb) {
        if (ta == tb) return;
        auto flips = diff_flips(ta, tb);
        if (flips && flips->size() == 1) {
            record(*flips, a, b);
            return;
        }
        if (b - a <= options_.floor) {
            if (flips && independent(*flips)) {
                record(*flips, a, b);
                return;
            }
            throw KineticsError("unresolved codimension-2 event; perturb trajectories (near t=" + a.to_string() + ")");
        }
        const Rational mid = (a + b) / Rational(2);
        auto [tm, mid_tri] = triangulate_near(ts_, mid, a, b, options_.floor / Rational(3), options_.max_jitter_retries);
        refine(a, ta, tm, mid_tri);
        refine(tm, mid_tri, b, tb);
    }

    std::vector<FlipEvent> take() { return std::move(events_); }

private:
    static bool independent(const std::vector<FlipEvent>& flips) {
        for (std::size_t x = 0; x < flips.size(); ++x)
            for (std::size_t y = x + 1; y < flips.size(); ++y)
                if (shared_vertices(flips[x].quad, flips[y].quad) > 2) return false;
        return true;
    }

    void record(std::vector<FlipEvent>& flips, const Rational& a, const Rational& b) {
        for (auto& f : flips) {
            f.bracket = std::make_pair(a, b);
            events_.push_back(std::move(f));
        }
    }

    const TrajectorySet& ts_;
    const KineticOptions& options_;
    std::vector<FlipEvent> events_;
};

Triangulation endpoint_triangulation(const TrajectorySet& ts, const Rational& t) {
    try {
        return build_delaunay(configuration_at(ts, t));
    } catch (const DegenerateConfigurationError& e) {
        throw KineticsError("configuration at t=" + t.to_string() + " is not in general position: " + e.what());
    }
}

}  // namespace

FlipSequence extract_flip_sequence(const TrajectorySet& ts, const KineticOptions& options) {
    if (options.step <= Rational(0) || options.floor <= Rational(0))
        throw std::invalid_argument("sampling step and floor must be positive");
    if (!(options.floor < options.step)) throw std::invalid_argument("bisection floor must be below the sampling step");

    Extractor extractor(ts, options);
    Rational prev_t(0);
    Triangulation prev = endpoint_triangulation(ts, prev_t);
    const Triangulation last = endpoint_triangulation(ts, Rational(1));
    const Rational jitter = options.floor / Rational(3);
    for (long k = 1; prev_t < Rational(1); ++k) {
        const Rational grid = Rational(k) * options.step;
        Rational t;
        Triangulation current;
        if (grid >= Rational(1)) {
            t = Rational(1);
            current = last;
        } else {
            const Rational next = std::min(grid + options.step, Rational(1));
            std::tie(t, current) = triangulate_near(ts, grid, prev_t, next, jitter, options.max_jitter_retries);
        }
        extractor.refine(prev_t, prev, t, current);
        prev_t = t;
        prev = std::move(current);
    }
    return FlipSequence{extractor.take()};
}

}  // namespace flipbraid
