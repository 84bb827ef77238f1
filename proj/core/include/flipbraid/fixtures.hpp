#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flipbraid/matrix.hpp"
#include "flipbraid/rational.hpp"

// Loaders and checks for the transcribed reference matrices shipped under
// fixtures/ (pentagon.json, commuting_flips.json, pure_braid_commutation.json,
// MANIFEST.sha256).

namespace flipbraid::fixtures {

/// $FLIPBRAID_FIXTURES if set, else the directory baked in at build time.
std::filesystem::path default_directory();

/// Names of files whose SHA-256 disagrees with MANIFEST.sha256 (or that are
/// missing). Empty means the data is intact.
std::vector<std::string> verify_manifest(const std::filesystem::path& dir);

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& file);

using Binding = std::function<Rational(std::string_view symbol)>;

/**
 * Evaluates one symbolic entry: an integer or "p/q", or
 * [-](zA-zB)/(zC-zD) where A..D are symbol names resolved through `zeta`.
 * Throws ParseError on anything else and std::domain_error on a zero divisor.
 */
Rational evaluate_entry(std::string_view text, const Binding& zeta);

/// Matrix whose entries are kept as text until bound to labels.
struct SymbolicMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::string> entries;  // row-major

    RationalMatrix evaluate(const Binding& zeta) const;
};

/// Flip written "ab->cd": diagonal {a, b} replaced by {c, d}.
struct FlipLabel {
    std::string removed[2];
    std::string inserted[2];

    static FlipLabel parse(std::string_view text);
};

struct PentagonStep {
    FlipLabel flip;
    std::vector<std::string> from;  // local basis, e.g. "ijk"
    std::vector<std::string> to;
    SymbolicMatrix matrix;
};

struct PentagonFixture {
    std::vector<std::string> symbols;  // i j k l m
    std::vector<PentagonStep> steps;   // in time order
};

struct CommutingOrder {
    std::vector<FlipLabel> flips;          // in time order
    std::vector<SymbolicMatrix> factors;   // as printed: later flip on the left
    SymbolicMatrix product;
};

struct CommutingFlipsFixture {
    std::vector<std::string> symbols;  // point indices 1..6
    std::vector<CommutingOrder> orders;
};

struct BraidFactorList {
    std::vector<FlipLabel> flips;         // as printed, left to right
    std::vector<RationalMatrix> factors;  // as printed, left to right
    RationalMatrix product;
};

struct BraidCommutationFixture {
    std::map<std::string, int> strands;  // role letter -> point index
    BraidFactorList b_ij;
    BraidFactorList b_kl;
    RationalMatrix commuting_product;
};

PentagonFixture load_pentagon(const std::filesystem::path& dir);
CommutingFlipsFixture load_commuting_flips(const std::filesystem::path& dir);
BraidCommutationFixture load_braid_commutation(const std::filesystem::path& dir);

/// Binding for numeric symbols: "7" -> ζ_7 from `labels` (1-based).
Binding index_binding(const std::vector<Rational>& labels);

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first differing entry, or what was checked
};

/// Five pentagon flips at ζ = (1..5): printed matrices equal the builder's,
/// and their product is I₃.
SuiteResult run_pentagon_suite(const std::filesystem::path& dir);

/// Both printed orders of the two far flips at ζ_m = m reproduce the printed
/// product, and the products agree.
SuiteResult run_commuting_flips_suite(const std::filesystem::path& dir);

/// Products of the printed factor lists equal the printed 11×11 matrices and
/// the two products commute to the printed commuting product.
SuiteResult run_braid_commutation_suite(const std::filesystem::path& dir);

/// Manifest check followed by the three suites.
std::vector<SuiteResult> run_all(const std::filesystem::path& dir);

}  // namespace flipbraid::fixtures
