#pragma once

#include <nlohmann/json.hpp>

#include "flipbraid/braid.hpp"
#include "flipbraid/delaunay.hpp"
#include "flipbraid/geometry.hpp"
#include "flipbraid/kinetics.hpp"
#include "flipbraid/matrix.hpp"
#include "flipbraid/rational.hpp"
#include "flipbraid/relations.hpp"

// JSON forms of the library types. Rationals travel as "p/q" strings so every
// round trip is exact. Readers throw ParseError on malformed input.

namespace flipbraid::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"rows": R, "cols": C, "entries": [[...], ...]}
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"points": [{"index", "x", "y", "zeta"}, ...], "boundary": [1, 2, 3]}
Json to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

/// {"triangles": [[a, b, c], ...]} in lexicographic order.
Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const OrderedBasis& b);  // [[a, b, c], ...]

/// {"removed", "inserted", "quad", "gamma", "t_lo", "t_hi"}; the times are
/// present only for events with a bracket.
Json to_json(const FlipEvent& e);
FlipEvent flip_event_from_json(const Json& j);

/// Array of events.
Json to_json(const FlipSequence& s);
FlipSequence flip_sequence_from_json(const Json& j);

/// {"boundary": [...], "zeta": [...], "trajectories": [{"index", "breakpoints": [["t", "x", "y"], ...]}]}
/// "boundary" defaults to [1, 2, 3] and "zeta" to the point indices when
/// absent. Positions at t = 0 define the base configuration.
Json to_json(const TrajectorySet& ts);
TrajectorySet trajectories_from_json(const Json& j);

struct InvariantJsonOptions {
    bool trace = false;
    bool charpoly = false;
    bool flips = false;
};

/// {"n", "word", "basis", "matrix"} plus "trace", "charpoly", "flips" on request.
Json to_json(const InvariantResult& r, const BraidWord& word, const InvariantJsonOptions& options = {});

/// {"family", "n", "passed", "instances": [{"name", "passed", "detail"?, "sides"?}]}
Json to_json(const RelationReport& r);

}  // namespace flipbraid::json
