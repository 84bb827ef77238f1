#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flipbraid/braid.hpp"
#include "flipbraid/matrix.hpp"

namespace flipbraid {

enum class RelationFamily { inverse, far_comm, pentagon, pb_all };

std::string to_string(RelationFamily family);
std::optional<RelationFamily> parse_family(std::string_view text);

struct RelationInstance {
    std::string name;  // e.g. "pb2 b(1,2) b(1,3) b(2,3) = b(2,3) b(1,2) b(1,3)"
    bool passed = false;
    std::string detail;                 // first differing entry on failure
    std::vector<RationalMatrix> sides;  // the compared matrices, kept only on failure
};

struct RelationReport {
    RelationFamily family = RelationFamily::pb_all;
    int n = 0;
    std::vector<RelationInstance> instances;

    bool all_passed() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Random label draws for the algebraic families.
    int trials = 100;
    /// For pb_all: at most this many instances per relation (0 = every instance),
    /// chosen with the seed.
    int sample = 0;
    InvariantOptions invariant;
};

/**
 * inverse:  flip matrix times its reverse is I for random labels, and
 *           f(b(i,j) b(i,j)^-1) = I for every generator at n.
 * far_comm: two flips in quadrilaterals sharing two points commute for
 *           random labels; f(u v) = f(v u) for every commuting generator pair.
 * pentagon: the five-flip cycle composes to I at ζ = (1..5) and random labels.
 * pb_all:   every instance of the three defining relations of the pure braid
 *           group at n, through the motion pipeline.
 */
RelationReport verify_relations(int n, RelationFamily family, const VerifyOptions& options = {});

/// The two or three words compared by one pure braid relation instance.
struct RelationWords {
    std::string name;
    std::vector<BraidWord> sides;
};

/// Every instance of the three defining relations at n, in enumeration order.
std::vector<RelationWords> pure_braid_relations(int n);

}  // namespace flipbraid
