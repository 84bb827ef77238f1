#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flipbraid {

/// Shape disagreement between matrix operands (or a non-square argument).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exact elimination when no pivot exists.
class SingularMatrixError : public std::domain_error {
public:
    SingularMatrixError() : std::domain_error("singular matrix") {}
};

/// Malformed textual input (rationals, braid words, JSON payloads).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A configuration violates one of its structural invariants.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Three collinear points were handed to the incircle predicate.
class DegenerateCircumcircleError : public std::domain_error {
public:
    DegenerateCircumcircleError() : std::domain_error("degenerate circumcircle") {}
};

/// Four points are cocircular with an empty open circumdisk, so the
/// Delaunay triangulation is not unique.
class DegenerateConfigurationError : public std::domain_error {
public:
    explicit DegenerateConfigurationError(std::array<int, 4> subset)
        : std::domain_error(describe(subset)), subset_(subset) {}

    const std::array<int, 4>& subset() const noexcept { return subset_; }

private:
    static std::string describe(const std::array<int, 4>& s) {
        return "configuration not in general position: points {" + std::to_string(s[0]) + "," +
               std::to_string(s[1]) + "," + std::to_string(s[2]) + "," + std::to_string(s[3]) +
               "} are cocircular with an empty circumdisk";
    }

    std::array<int, 4> subset_;
};

/// Flip roles or bases that do not describe a single diagonal exchange.
class FlipError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Flip extraction could not produce a certified event order.
class KineticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace flipbraid
