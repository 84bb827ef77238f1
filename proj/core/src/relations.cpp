#include "flipbraid/relations.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "flipbraid/flip_algebra.hpp"

namespace flipbraid {

std::string to_string(RelationFamily family) {
    switch (family) {
        case RelationFamily::inverse: return "inverse";
        case RelationFamily::far_comm: return "far_comm";
        case RelationFamily::pentagon: return "pentagon";
        case RelationFamily::pb_all: return "pb_all";
    }
    return "unknown";
}

std::optional<RelationFamily> parse_family(std::string_view text) {
    for (auto f : {RelationFamily::inverse, RelationFamily::far_comm, RelationFamily::pentagon, RelationFamily::pb_all})
        if (text == to_string(f)) return f;
    return std::nullopt;
}

bool RelationReport::all_passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const RelationInstance& r) { return r.passed; });
}

std::size_t RelationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const RelationInstance& r) { return !r.passed; }));
}

namespace {

using Rng = std::mt19937_64;

// Portable draws: std distributions differ between standard libraries.
long draw(Rng& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

LabelMap random_labels(Rng& rng, std::size_t count) {
    std::set<Rational> seen;
    std::vector<Rational> labels;
    while (labels.size() < count) {
        Rational z(draw(rng, -60, 60), draw(rng, 1, 12));
        if (seen.insert(z).second) labels.push_back(z);
    }
    return LabelMap(std::move(labels));
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[static_cast<std::size_t>(rng() % k)]);
}

BraidWord word(int n, std::initializer_list<std::pair<int, int>> gens) {
    BraidWord w{n, {}};
    for (auto [i, j] : gens) w.letters.push_back(Letter{i, j, 1});
    return w;
}

RelationInstance compare(std::string name, std::vector<RationalMatrix> sides) {
    RelationInstance inst{std::move(name), true, {}, {}};
    for (std::size_t s = 1; s < sides.size(); ++s) {
        if (sides[s].rows() != sides[0].rows() || sides[s].cols() != sides[0].cols()) {
            inst.passed = false;
            inst.detail = "side " + std::to_string(s) + " has shape " + sides[s].shape();
            break;
        }
        const auto [r, c] = first_difference(sides[0], sides[s]);
        if (r >= 0) {
            inst.passed = false;
            inst.detail = "side " + std::to_string(s) + " differs from side 0 at (" + std::to_string(r) + ", " +
                          std::to_string(c) + "): " + sides[s](static_cast<std::size_t>(r), static_cast<std::size_t>(c)).to_string() +
                          " vs " + sides[0](static_cast<std::size_t>(r), static_cast<std::size_t>(c)).to_string();
            break;
        }
    }
    if (!inst.passed) inst.sides = std::move(sides);
    return inst;
}

RationalMatrix observed(const FlipRoles& roles, std::span<const Triangle> from, std::span<const Triangle> to,
                        const LabelMap& labels, const VerifyOptions& options) {
    RationalMatrix m = build_flip_matrix(roles, from, to, labels);
    if (options.invariant.on_flip_matrix)
        options.invariant.on_flip_matrix(FlipMatrix{m, OrderedBasis({from.begin(), from.end()}), OrderedBasis({to.begin(), to.end()})});
    return m;
}

void inverse_family(int n, const VerifyOptions& options, Rng& rng, RelationReport& report) {
    for (int t = 0; t < options.trials; ++t) {
        const LabelMap labels = random_labels(rng, 4);
        std::vector<int> p{1, 2, 3, 4};
        shuffle(p, rng);
        const FlipRoles roles{p[0], p[1], p[2], p[3]};
        const FlipRoles back = reverse_roles(roles);
        const OrderedBasis from({Triangle::of(roles.i, roles.j, roles.k), Triangle::of(roles.i, roles.k, roles.l)});
        const OrderedBasis to({Triangle::of(roles.i, roles.j, roles.l), Triangle::of(roles.j, roles.k, roles.l)});
        const RationalMatrix a = observed(roles, from.span(), to.span(), labels, options);
        const RationalMatrix b = observed(back, to.span(), from.span(), labels, options);
        const std::string name = "flip inverse draw " + std::to_string(t);
        report.instances.push_back(compare(name, {RationalMatrix::identity(2), b * a, a * b}));
        report.instances.push_back(compare(name + " against exact inverse", {mat_inverse(a), b}));
    }
    if (n < 2) return;
    InvariantEngine engine(n, options.invariant);
    InvariantOptions by_matrix = options.invariant;
    by_matrix.inverse_by_matrix = true;
    InvariantEngine fast(n, by_matrix);
    const auto identity = RationalMatrix::identity(static_cast<std::size_t>(2 * n + 1));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Letter b{i, j, 1};
            const BraidWord w{n, {b, b.inverse()}};
            const BraidWord w2{n, {b.inverse(), b}};
            report.instances.push_back(
                compare(w.to_string() + " = e", {identity, engine.invariant(w).matrix, engine.invariant(w2).matrix}));
            report.instances.push_back(compare(b.inverse().to_string() + " simulated = inverse matrix",
                                               {engine.letter(b.inverse()).matrix, fast.letter(b.inverse()).matrix}));
        }
    }
}

void far_comm_family(int n, const VerifyOptions& options, Rng& rng, RelationReport& report) {
    // Six points: flips 35->24 and 15->46 in quadrilaterals sharing {4,5}.
    const auto T = [](int a, int b, int c) { return Triangle::of(a, b, c); };
    const Triangulation t0({T(1, 2, 6), T(1, 3, 4), T(1, 4, 5), T(1, 5, 6), T(2, 3, 5), T(2, 5, 6), T(3, 4, 5)});
    const FlipEvent first = FlipEvent::make(3, 5, 2, 4);
    const FlipEvent second = FlipEvent::make(1, 5, 4, 6);
    const Triangulation ta = apply_flip(t0, first);
    const Triangulation tb = apply_flip(t0, second);
    const Triangulation tab = apply_flip(ta, second);
    const Triangulation tba = apply_flip(tb, first);
    const auto basis = [](const Triangulation& t) { return ordered_basis(t); };
    for (int t = 0; t < options.trials; ++t) {
        const LabelMap labels = t == 0 ? LabelMap::identity(6) : random_labels(rng, 6);
        const auto A = [&](const FlipEvent& e, const Triangulation& f, const Triangulation& g) {
            return observed(canonical_roles(e), basis(f).span(), basis(g).span(), labels, options);
        };
        const RationalMatrix ab = A(second, ta, tab) * A(first, t0, ta);
        const RationalMatrix ba = A(first, tb, tba) * A(second, t0, tb);
        report.instances.push_back(compare("six-point commuting flips draw " + std::to_string(t), {ab, ba}));
    }
    if (n < 4) return;
    InvariantEngine engine(n, options.invariant);
    for (const auto& rel : pure_braid_relations(n)) {
        if (rel.name.rfind("pb1", 0) != 0) continue;
        std::vector<RationalMatrix> sides;
        for (const auto& w : rel.sides) sides.push_back(engine.invariant(w).matrix);
        report.instances.push_back(compare(rel.name, std::move(sides)));
    }
}

void pentagon_family(const VerifyOptions& options, Rng& rng, RelationReport& report) {
    const std::vector<FlipStep> steps = pentagon_cycle(1, 2, 3, 4, 5);
    for (int t = 0; t <= options.trials; ++t) {
        const LabelMap labels = t == 0 ? LabelMap::identity(5) : random_labels(rng, 5);
        RationalMatrix product = RationalMatrix::identity(3);
        for (const auto& s : steps) product = observed(s.roles, s.from, s.to, labels, options) * product;
        const std::string name = t == 0 ? "pentagon at zeta = (1 2 3 4 5)" : "pentagon draw " + std::to_string(t);
        report.instances.push_back(compare(name, {RationalMatrix::identity(3), product}));
    }
}

void pb_family(int n, const VerifyOptions& options, Rng& rng, RelationReport& report) {
    std::vector<RelationWords> all = pure_braid_relations(n);
    if (options.sample > 0) {
        std::vector<RelationWords> chosen;
        for (const char* prefix : {"pb1", "pb2", "pb3"}) {
            std::vector<RelationWords> group;
            for (const auto& r : all)
                if (r.name.rfind(prefix, 0) == 0) group.push_back(r);
            shuffle(group, rng);
            if (group.size() > static_cast<std::size_t>(options.sample)) group.resize(static_cast<std::size_t>(options.sample));
            chosen.insert(chosen.end(), group.begin(), group.end());
        }
        all = std::move(chosen);
    }
    if (all.empty()) return;
    InvariantEngine engine(n, options.invariant);
    for (const auto& rel : all) {
        std::vector<RationalMatrix> sides;
        for (const auto& w : rel.sides) sides.push_back(engine.invariant(w).matrix);
        report.instances.push_back(compare(rel.name, std::move(sides)));
    }
}

}  // namespace

std::vector<RelationWords> pure_braid_relations(int n) {
    std::vector<RelationWords> out;
    const auto join = [](const std::vector<BraidWord>& sides) {
        std::string s;
        for (const auto& w : sides) s += (s.empty() ? "" : " = ") + w.to_string();
        return s;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (!(l < i || (i < k && l < j))) continue;
                    std::vector<BraidWord> sides{word(n, {{i, j}, {k, l}}), word(n, {{k, l}, {i, j}})};
                    out.push_back({"pb1 " + join(sides), sides});
                }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                std::vector<BraidWord> sides{word(n, {{i, j}, {i, k}, {j, k}}), word(n, {{j, k}, {i, j}, {i, k}}),
                                             word(n, {{i, k}, {j, k}, {i, j}})};
                out.push_back({"pb2 " + join(sides), sides});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    std::vector<BraidWord> sides{word(n, {{j, l}, {k, l}, {i, k}, {j, k}}),
                                                 word(n, {{k, l}, {i, k}, {j, k}, {j, l}})};
                    out.push_back({"pb3 " + join(sides), sides});
                }
    return out;
}

RelationReport verify_relations(int n, RelationFamily family, const VerifyOptions& options) {
    if (n < 0) throw std::invalid_argument("strand count must be non-negative");
    RelationReport report{family, n, {}};
    Rng rng(options.seed);
    switch (family) {
        case RelationFamily::inverse: inverse_family(n, options, rng, report); break;
        case RelationFamily::far_comm: far_comm_family(n, options, rng, report); break;
        case RelationFamily::pentagon: pentagon_family(options, rng, report); break;
        case RelationFamily::pb_all: pb_family(n, options, rng, report); break;
    }
    return report;
}

}  // namespace flipbraid
