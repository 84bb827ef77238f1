#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "flipbraid/delaunay.hpp"
#include "flipbraid/flip_algebra.hpp"
#include "flipbraid/geometry.hpp"
#include "flipbraid/kinetics.hpp"
#include "flipbraid/matrix.hpp"

namespace flipbraid {

/// Generator b(i,j)^power of the pure braid group, 1 <= i < j <= n.
struct Letter {
    int i = 0;
    int j = 0;
    int power = 1;  // +1 or -1

    Letter inverse() const { return Letter{i, j, -power}; }
    std::string to_string() const;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct BraidWord {
    int n = 0;
    std::vector<Letter> letters;

    /// Letters reversed with flipped powers.
    BraidWord inverse() const;
    std::string to_string() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Concatenation u·v (u first in time). Strand counts must agree.
BraidWord operator*(const BraidWord& u, const BraidWord& v);

/**
 * Parses whitespace-separated tokens `b(i,j)` or `b(i,j)^-1`. Spaces inside a
 * token are not allowed. Throws ParseError carrying the offending token's
 * offset for malformed tokens, i >= j ("i < j required") and indices outside
 * 1..n.
 */
BraidWord parse_word(std::string_view text, int n);

/// Point index carrying strand k.
constexpr int strand_point(int strand) noexcept { return strand + 3; }

/// Shape of the loop realizing b(i,j): height above the strand axis, depth
/// below it, and horizontal margin around the target strand.
struct LoopGeometry {
    Rational height = Rational(1);
    Rational depth = Rational(1, 2);
    Rational margin = Rational(1, 4);
};

struct CanonicalSetup {
    int n = 0;
    Configuration configuration;  // t = 0 state: boundary 1,2,3 then strands at 4..n+3
    int nudges = 0;               // number of y perturbation rounds applied
};

/**
 * Boundary (-(n+4), -2), (2n+5, -2), ((n+1)/2, 3n+9); strand k at
 * (k, k^2/(100 n^2)); ζ_m = m. Interior y values are nudged deterministically
 * until the exhaustive general-position check passes.
 */
CanonicalSetup canonical_setup(int n);

/**
 * Closed piecewise-linear loop of strand i around strand j: up to the loop
 * height, across to the far side of j, down below it, back under j, up again,
 * and home along the same upper route. Speed is constant. Power -1 runs the
 * loop backwards. All other points stay put.
 *
 * Throws ConfigurationError if the loop touches another point or its
 * rectangle around j contains any point other than j.
 */
TrajectorySet generator_trajectories(const CanonicalSetup& setup, const Letter& letter,
                                     const LoopGeometry& loop = {});

/// Corner points of the loop (first == last == home of strand i), in
/// traversal order for power +1.
std::vector<Point2> generator_loop(const CanonicalSetup& setup, const Letter& letter, const LoopGeometry& loop = {});

/// All letters' trajectories concatenated, each letter taking an equal share
/// of [0, 1]. The empty word yields the stationary set.
TrajectorySet word_trajectories(const CanonicalSetup& setup, const BraidWord& word, const LoopGeometry& loop = {});

struct InvariantOptions {
    KineticOptions kinetics;
    LoopGeometry loop;
    /// Compute b^-1 as the inverse of the b matrix instead of simulating the
    /// reversed loop.
    bool inverse_by_matrix = false;
    /// Extract flips from the concatenated trajectory of the whole word
    /// instead of letter by letter.
    bool whole_word = false;
    /// Called with every flip matrix built.
    std::function<void(const FlipMatrix&)> on_flip_matrix;
};

struct LetterRecord {
    Letter letter;
    FlipSequence flips;  // brackets in the letter's own time [0, 1]
    RationalMatrix matrix;
};

struct InvariantResult {
    int n = 0;
    RationalMatrix matrix;
    OrderedBasis basis;                 // basis of the t = 0 triangulation
    std::vector<LetterRecord> letters;  // empty in whole-word mode
    FlipSequence flips;                 // all events, brackets in word time [0, 1]

    Rational trace() const;
    std::vector<Rational> charpoly() const;
};

/**
 * Folds flip events over `start`, multiplying each flip matrix on the left.
 * Returns the product and the final triangulation.
 */
std::pair<RationalMatrix, Triangulation> flip_product(const Triangulation& start, const FlipSequence& flips,
                                                      const LabelMap& labels,
                                                      const std::function<void(const FlipMatrix&)>& observer = {});

/// Computes f_n(word) through the motion pipeline. Reuses per-letter results,
/// so repeated calls on one engine are cheap.
class InvariantEngine {
public:
    explicit InvariantEngine(int n, InvariantOptions options = {});

    int n() const noexcept { return setup_.n; }
    const CanonicalSetup& setup() const noexcept { return setup_; }
    const Triangulation& initial_triangulation() const noexcept { return initial_; }
    const InvariantOptions& options() const noexcept { return options_; }

    const LetterRecord& letter(const Letter& l);
    InvariantResult invariant(const BraidWord& word);

private:
    LetterRecord simulate(const Letter& l);

    CanonicalSetup setup_;
    InvariantOptions options_;
    Triangulation initial_;
    LabelMap labels_;
    std::map<Letter, LetterRecord> cache_;
};

/// One-shot convenience wrapper around InvariantEngine.
InvariantResult invariant(const BraidWord& word, const InvariantOptions& options = {});

}  // namespace flipbraid
