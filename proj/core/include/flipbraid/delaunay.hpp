#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flipbraid/geometry.hpp"
#include "flipbraid/rational.hpp"

namespace flipbraid {

/// Triangle key with strictly ascending vertex indices.
struct Triangle {
    int a = 0;
    int b = 0;
    int c = 0;

    /// Sorts the three indices; throws std::invalid_argument on repeats.
    static Triangle of(int i, int j, int k);

    bool contains(int v) const noexcept { return a == v || b == v || c == v; }
    std::array<int, 3> vertices() const noexcept { return {a, b, c}; }
    std::string to_string() const;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Lexicographically sorted triangle list used as the basis of the
/// free Q-module spanned by a triangulation's triangles.
class OrderedBasis {
public:
    OrderedBasis() = default;
    explicit OrderedBasis(std::vector<Triangle> triangles);  // sorts

    std::size_t size() const noexcept { return triangles_.size(); }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    std::span<const Triangle> span() const noexcept { return triangles_; }
    const Triangle& operator[](std::size_t k) const { return triangles_[k]; }

    /// 0-based position of t, if present.
    std::optional<std::size_t> index_of(const Triangle& t) const;

    friend bool operator==(const OrderedBasis&, const OrderedBasis&) = default;

private:
    std::vector<Triangle> triangles_;
};

/// One diagonal exchange: edge `removed` replaced by edge `inserted` inside
/// the convex quadrilateral `quad`. Pairs and quad are stored sorted.
struct FlipEvent {
    std::array<int, 2> removed{};
    std::array<int, 2> inserted{};
    std::array<int, 4> quad{};
    std::optional<std::pair<Rational, Rational>> bracket;  // (t_lo, t_hi)

    static FlipEvent make(int i, int k, int j, int l);

    /// Same exchange, ignoring the time bracket.
    bool same_exchange(const FlipEvent& other) const {
        return removed == other.removed && inserted == other.inserted;
    }
};

/// Delaunay triangle set of a configuration (bounded triangles only).
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::vector<Triangle> triangles);  // sorts, rejects duplicates

    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    std::size_t size() const noexcept { return triangles_.size(); }
    bool contains(const Triangle& t) const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    std::vector<Triangle> triangles_;
};

/**
 * Incremental Bowyer–Watson starting from the boundary triangle, inserting
 * interior points in index order (or in `insertion_order` when given).
 *
 * Every result is checked exhaustively: each triangle's open circumdisk must
 * be empty and no other point may lie on its circumcircle. A point on a
 * circumcircle means the configuration is not in general position and
 * DegenerateConfigurationError is thrown with the offending 4-subset.
 */
Triangulation build_delaunay(const Configuration& config);
Triangulation build_delaunay(const Configuration& config, std::span<const int> insertion_order);

OrderedBasis ordered_basis(const Triangulation& t);

/**
 * Decomposes the symmetric difference of two triangulations into disjoint
 * quadrilateral diagonal exchanges, sorted by quad. Returns an empty list for
 * equal triangulations and std::nullopt when the difference is not a set of
 * independent flips.
 */
std::optional<std::vector<FlipEvent>> diff_flips(const Triangulation& before, const Triangulation& after);

/// Replaces the two triangles on the removed diagonal with the two on the
/// inserted one. Throws FlipError if the flip does not apply.
Triangulation apply_flip(const Triangulation& t, const FlipEvent& flip);

/// Number of shared vertices between two quadrilaterals.
int shared_vertices(const std::array<int, 4>& p, const std::array<int, 4>& q);

/// Triangles whose open circumdisk contains another point (should be empty
/// for a Delaunay triangulation).
std::vector<Triangle> non_delaunay_triangles(const Configuration& config, const Triangulation& t);

}  // namespace flipbraid
