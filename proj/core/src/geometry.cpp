#include "flipbraid/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "flipbraid/errors.hpp"

namespace flipbraid {

namespace {

int sign_of(const mpq_class& v) { return sgn(v); }

}  // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const mpq_class& ax = a.x.raw();
    const mpq_class& ay = a.y.raw();
    mpq_class det = (b.x.raw() - ax) * (c.y.raw() - ay) - (b.y.raw() - ay) * (c.x.raw() - ax);
    return sign_of(det);
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int orientation = orient2d(a, b, c);
    if (orientation == 0) throw DegenerateCircumcircleError();

    const mpq_class& dx = d.x.raw();
    const mpq_class& dy = d.y.raw();
    mpq_class adx = a.x.raw() - dx, ady = a.y.raw() - dy;
    mpq_class bdx = b.x.raw() - dx, bdy = b.y.raw() - dy;
    mpq_class cdx = c.x.raw() - dx, cdy = c.y.raw() - dy;
    mpq_class alift = adx * adx + ady * ady;
    mpq_class blift = bdx * bdx + bdy * bdy;
    mpq_class clift = cdx * cdx + cdy * cdy;
    mpq_class det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                    clift * (adx * bdy - bdx * ady);
    return sign_of(det) * orientation;
}

bool strictly_inside_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
    const int o = orient2d(a, b, c);
    if (o == 0) return false;
    return orient2d(a, b, p) == o && orient2d(b, c, p) == o && orient2d(c, a, p) == o;
}

Configuration::Configuration(std::vector<LabeledPoint> points, std::array<int, 3> boundary)
    : points_(std::move(points)), boundary_(boundary) {
    std::sort(points_.begin(), points_.end(),
              [](const LabeledPoint& a, const LabeledPoint& b) { return a.index < b.index; });
    if (points_.size() < 3) throw ConfigurationError("configuration needs at least the 3 boundary points");
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (points_[k].index != static_cast<int>(k + 1))
            throw ConfigurationError("point indices must be exactly 1.." + std::to_string(points_.size()));
    }
    std::set<Rational> labels;
    for (const auto& p : points_) {
        if (!labels.insert(p.zeta).second)
            throw ConfigurationError("duplicate zeta label " + p.zeta.to_string() + " at point " +
                                     std::to_string(p.index));
    }
    std::sort(boundary_.begin(), boundary_.end());
    if (boundary_[0] == boundary_[1] || boundary_[1] == boundary_[2])
        throw ConfigurationError("boundary indices must be distinct");
    for (int b : boundary_) {
        if (b < 1 || b > static_cast<int>(points_.size()))
            throw ConfigurationError("boundary index " + std::to_string(b) + " out of range");
    }
    if (orient2d(position(boundary_[0]), position(boundary_[1]), position(boundary_[2])) == 0)
        throw ConfigurationError("boundary vertices are collinear");
    for (const auto& p : points_) {
        if (is_boundary(p.index)) continue;
        if (!strictly_inside_triangle(p.position, position(boundary_[0]), position(boundary_[1]),
                                      position(boundary_[2])))
            throw ConfigurationError("point " + std::to_string(p.index) +
                                     " is not strictly inside the boundary triangle");
    }
}

bool Configuration::is_boundary(int index) const {
    return std::find(boundary_.begin(), boundary_.end(), index) != boundary_.end();
}

std::vector<int> Configuration::interior() const {
    std::vector<int> out;
    for (const auto& p : points_)
        if (!is_boundary(p.index)) out.push_back(p.index);
    return out;
}

Configuration Configuration::with_positions(std::span<const Point2> positions) const {
    if (positions.size() != points_.size())
        throw ConfigurationError("expected " + std::to_string(points_.size()) + " positions");
    std::vector<LabeledPoint> moved = points_;
    for (std::size_t k = 0; k < moved.size(); ++k) moved[k].position = positions[k];
    return Configuration(std::move(moved), boundary_);
}

GeneralPositionReport validate_general_position(const Configuration& config) {
    GeneralPositionReport report;
    const int m = static_cast<int>(config.size());
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            for (int c = b + 1; c <= m; ++c) {
                const Point2& pa = config.position(a);
                const Point2& pb = config.position(b);
                const Point2& pc = config.position(c);
                // A circle meets a line at most twice, so a collinear triple
                // cannot be part of a cocircular quadruple.
                if (orient2d(pa, pb, pc) == 0) continue;
                for (int d = c + 1; d <= m; ++d) {
                    if (incircle(pa, pb, pc, config.position(d)) != 0) continue;
                    bool empty = true;
                    for (int e = 1; e <= m && empty; ++e) {
                        if (e == a || e == b || e == c || e == d) continue;
                        if (incircle(pa, pb, pc, config.position(e)) > 0) empty = false;
                    }
                    if (empty) report.offending.push_back({a, b, c, d});
                }
            }
        }
    }
    return report;
}

}  // namespace flipbraid
