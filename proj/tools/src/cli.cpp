#include "flipbraid_cli/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "flipbraid/braid.hpp"
#include "flipbraid/errors.hpp"
#include "flipbraid/fixtures.hpp"
#include "flipbraid/json_io.hpp"
#include "flipbraid/relations.hpp"
#include "flipbraid/svg.hpp"

namespace flipbraid::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
    int n = 0;
    std::string word;
    std::string out_path;
    std::uint64_t seed = 1;
    std::string step = "1/64";
    std::string floor = "1/1099511627776";  // 2^-40
    std::string svg_dir;
    std::string family;
    int trials = 100;
    int sample = 0;
    bool charpoly = false;
    bool trace = false;
    bool flips = false;
    bool whole_word = false;
    bool inverse_by_matrix = false;
    std::string fixture_dir;
};

// Thrown for bad flag values that CLI11 cannot see (rationals, n, floor/step).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KineticOptions kinetic_options(const RunConfig& cfg) {
    KineticOptions k;
    try {
        k.step = Rational::parse(cfg.step);
        k.floor = Rational::parse(cfg.floor);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--step/--floor: ") + e.what());
    }
    if (k.step <= Rational(0) || k.step > Rational(1)) throw UsageError("--step must lie in (0, 1]");
    if (k.floor <= Rational(0)) throw UsageError("--floor must be positive");
    if (!(k.floor < k.step)) throw UsageError("--floor must be smaller than --step");
    return k;
}

void require_strands(const RunConfig& cfg) {
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + cfg.out_path);
    file << text;
}

std::string dump(const json::Json& j) { return j.dump(2) + "\n"; }

int cmd_invariant(const RunConfig& cfg, std::ostream& out) {
    require_strands(cfg);
    InvariantOptions options;
    options.kinetics = kinetic_options(cfg);
    options.whole_word = cfg.whole_word;
    options.inverse_by_matrix = cfg.inverse_by_matrix;
    const BraidWord word = parse_word(cfg.word, cfg.n);
    const InvariantResult result = invariant(word, options);
    emit(cfg, dump(json::to_json(result, word, {cfg.trace, cfg.charpoly, cfg.flips})), out);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    require_strands(cfg);
    const auto family = parse_family(cfg.family);
    if (!family) throw UsageError("unknown --family '" + cfg.family + "' (inverse, far_comm, pentagon, pb_all)");
    if (cfg.trials < 0 || cfg.sample < 0) throw UsageError("--trials and --sample must be non-negative");
    VerifyOptions options;
    options.seed = cfg.seed;
    options.trials = cfg.trials;
    options.sample = cfg.sample;
    options.invariant.kinetics = kinetic_options(cfg);
    options.invariant.whole_word = cfg.whole_word;
    const RelationReport report = verify_relations(cfg.n, *family, options);
    if (report.instances.empty()) throw UsageError("no " + cfg.family + " instances at n = " + std::to_string(cfg.n));
    for (const auto& inst : report.instances) {
        out << (inst.passed ? "PASS " : "FAIL ") << inst.name;
        if (!inst.passed) out << ": " << inst.detail;
        out << "\n";
    }
    out << to_string(*family) << " n=" << cfg.n << ": " << report.instances.size() - report.failures() << "/"
        << report.instances.size() << " passed\n";
    if (!cfg.out_path.empty()) emit(cfg, dump(json::to_json(report)), out);
    return report.all_passed() ? kOk : kMathFailure;
}

int cmd_fixtures(const RunConfig& cfg, std::ostream& out) {
    const fs::path dir = cfg.fixture_dir.empty() ? fixtures::default_directory() : fs::path(cfg.fixture_dir);
    bool ok = true;
    for (const auto& r : fixtures::run_all(dir)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
    }
    return ok ? kOk : kMathFailure;
}

std::string snapshot_name(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%04zu.svg", k);
    return buf;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    require_strands(cfg);
    const KineticOptions kinetics = kinetic_options(cfg);
    const BraidWord word = parse_word(cfg.word, cfg.n);
    const CanonicalSetup setup = canonical_setup(cfg.n);
    const TrajectorySet ts = word_trajectories(setup, word);
    const FlipSequence flips = extract_flip_sequence(ts, kinetics);
    emit(cfg, dump(json::to_json(flips)), out);

    if (cfg.svg_dir.empty()) return kOk;
    const fs::path dir(cfg.svg_dir);
    fs::create_directories(dir);
    Triangulation current = build_delaunay(setup.configuration);
    const auto& events = flips.events;
    for (std::size_t k = 0; k <= events.size(); ++k) {
        if (k > 0) current = apply_flip(current, events[k - 1]);
        const Rational lo = k == 0 ? Rational(0) : events[k - 1].bracket->second;
        const Rational hi = k == events.size() ? Rational(1) : events[k].bracket->first;
        const Rational t = (lo + hi) / Rational(2);
        std::string caption = "t = " + t.to_string();
        if (k > 0) caption += " after " + gamma_generator_name(canonical_roles(events[k - 1]));
        std::ofstream file(dir / snapshot_name(k), std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + (dir / snapshot_name(k)).string());
        file << render_svg(configuration_at(ts, t), current, SvgOptions{640, caption});
    }
    return kOk;
}

void add_kinetic_flags(CLI::App* app, RunConfig& cfg) {
    app->add_option("--step", cfg.step, "initial sampling step, p/q")->capture_default_str();
    app->add_option("--floor", cfg.floor, "bisection floor, p/q")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Pure braid invariants from Delaunay flips", "flipbraid"};
    app.require_subcommand(1);

    auto* inv = app.add_subcommand("invariant", "compute the matrix of a pure braid word");
    inv->add_option("--n", cfg.n, "number of strands")->required();
    inv->add_option("--word", cfg.word, "word such as \"b(1,3) b(2,3)^-1\"");
    inv->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
    inv->add_flag("--trace", cfg.trace, "include the trace");
    inv->add_flag("--charpoly", cfg.charpoly, "include the characteristic polynomial");
    inv->add_flag("--flips", cfg.flips, "include the flip log");
    inv->add_flag("--whole-word", cfg.whole_word, "extract flips from the concatenated motion");
    inv->add_flag("--inverse-by-matrix", cfg.inverse_by_matrix, "invert matrices instead of reversing loops");
    add_kinetic_flags(inv, cfg);

    auto* ver = app.add_subcommand("verify", "check relations of the representation");
    ver->add_option("--n", cfg.n, "number of strands")->required();
    ver->add_option("--family", cfg.family, "inverse | far_comm | pentagon | pb_all")->required();
    ver->add_option("--trials", cfg.trials, "random label draws")->capture_default_str();
    ver->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    ver->add_option("--sample", cfg.sample, "pb_all: instances per relation, 0 = all")->capture_default_str();
    ver->add_option("--out", cfg.out_path, "also write the JSON report here");
    ver->add_flag("--whole-word", cfg.whole_word, "extract flips from the concatenated motion");
    add_kinetic_flags(ver, cfg);

    auto* fix = app.add_subcommand("fixtures", "check the bundled reference matrices");
    fix->add_option("--dir", cfg.fixture_dir, "fixture directory (default: $FLIPBRAID_FIXTURES or built-in)");

    auto* sim = app.add_subcommand("simulate", "print the flip sequence of a word");
    sim->add_option("--n", cfg.n, "number of strands")->required();
    sim->add_option("--word", cfg.word, "braid word");
    sim->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
    sim->add_option("--svg-dir", cfg.svg_dir, "write one SVG per triangulation here");
    add_kinetic_flags(sim, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (inv->parsed()) return cmd_invariant(cfg, out);
        if (ver->parsed()) return cmd_verify(cfg, out);
        if (fix->parsed()) return cmd_fixtures(cfg, out);
        return cmd_simulate(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMathFailure;
    }
}

}  // namespace flipbraid::cli
