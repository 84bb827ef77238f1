#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "flipbraid/delaunay.hpp"
#include "flipbraid/geometry.hpp"
#include "flipbraid/matrix.hpp"
#include "flipbraid/rational.hpp"

namespace flipbraid {

/// ζ labels indexed by point index (1-based).
class LabelMap {
public:
    LabelMap() = default;
    explicit LabelMap(std::vector<Rational> by_index);  // by_index[k] labels point k + 1
    explicit LabelMap(const Configuration& config);

    /// ζ_m = m for m = 1..count.
    static LabelMap identity(std::size_t count);

    const Rational& operator[](int index) const;
    std::size_t size() const noexcept { return labels_.size(); }

private:
    std::vector<Rational> labels_;
};

/**
 * Role assignment for the flip ik -> jl: diagonal {i, k} is removed and
 * diagonal {j, l} inserted. Before the flip the quadrilateral is covered by
 * Δ(ijk) and Δ(ikl); afterwards by Δ(ijl) and Δ(jkl).
 */
struct FlipRoles {
    int i = 0;
    int j = 0;
    int k = 0;
    int l = 0;

    /// Throws FlipError unless all four indices are distinct.
    void validate() const;

    friend bool operator==(const FlipRoles&, const FlipRoles&) = default;
};

/// Canonical roles of an event: i < k, j < l.
FlipRoles canonical_roles(const FlipEvent& event);

/// Removed and inserted diagonals swapped: the roles of the reverse flip.
FlipRoles reverse_roles(const FlipRoles& roles);

/// Representative "d(i j k l)" of the dihedral class of the quadrilateral
/// cycle (i, j, k, l): the lexicographically least of its eight symmetries.
std::string gamma_generator_name(const FlipRoles& roles);

/**
 * Matrix of the basis change induced by a flip. Columns follow `from`,
 * rows follow `to`. Shared triangles map to themselves; the two removed
 * triangles map onto the two inserted ones with ζ-ratio coefficients.
 *
 * The bases are taken in the order given, so callers may pass the
 * lexicographic OrderedBasis or any explicit local ordering.
 *
 * Throws FlipError if the bases do not differ by exactly this flip and
 * FlipError("coincident labels") if ζ_i = ζ_k.
 */
RationalMatrix build_flip_matrix(const FlipRoles& roles, std::span<const Triangle> from,
                                 std::span<const Triangle> to, const LabelMap& labels);

struct FlipMatrix {
    RationalMatrix matrix;
    OrderedBasis from;
    OrderedBasis to;
};

FlipMatrix build_flip_matrix(const FlipRoles& roles, const OrderedBasis& from, const OrderedBasis& to,
                             const LabelMap& labels);

/// The 2x2 active block [[(ζi-ζl)/(ζi-ζk), (ζi-ζj)/(ζi-ζk)], [(ζl-ζk)/(ζi-ζk), (ζj-ζk)/(ζi-ζk)]]
/// with columns (Δijk, Δikl) and rows (Δijl, Δjkl).
RationalMatrix flip_block(const FlipRoles& roles, const LabelMap& labels);

/// One step of a flip path: roles plus the bases on either side.
struct FlipStep {
    FlipRoles roles;
    std::vector<Triangle> from;
    std::vector<Triangle> to;
};

/**
 * The five flips around a pentagon (i, j, k, l, m) starting from the fan
 * (ijk, ikl, ilm): il->km, ik->jm, km->jl, jm->il, jl->ik, with the local
 * basis orderings used for the printed 3x3 matrices.
 */
std::vector<FlipStep> pentagon_cycle(int i, int j, int k, int l, int m);

/// Ordered product A_5 A_4 ... A_1 of a flip path (later flips on the left).
RationalMatrix path_product(std::span<const FlipStep> steps, const LabelMap& labels);

}  // namespace flipbraid
