#include "flipbraid/flip_algebra.hpp"

#include <algorithm>
#include <optional>

#include "flipbraid/errors.hpp"

namespace flipbraid {

LabelMap::LabelMap(std::vector<Rational> by_index) : labels_(std::move(by_index)) {}

LabelMap::LabelMap(const Configuration& config) {
    labels_.reserve(config.size());
    for (const auto& p : config.points()) labels_.push_back(p.zeta);
}

LabelMap LabelMap::identity(std::size_t count) {
    std::vector<Rational> v;
    v.reserve(count);
    for (std::size_t m = 1; m <= count; ++m) v.emplace_back(static_cast<long>(m));
    return LabelMap(std::move(v));
}

const Rational& LabelMap::operator[](int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > labels_.size())
        throw std::out_of_range("no zeta label for point " + std::to_string(index));
    return labels_[static_cast<std::size_t>(index - 1)];
}

void FlipRoles::validate() const {
    std::array<int, 4> v{i, j, k, l};
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw FlipError("flip roles must be four distinct points");
}

FlipRoles canonical_roles(const FlipEvent& event) {
    return FlipRoles{event.removed[0], event.inserted[0], event.removed[1], event.inserted[1]};
}

FlipRoles reverse_roles(const FlipRoles& roles) { return FlipRoles{roles.j, roles.i, roles.l, roles.k}; }

std::string gamma_generator_name(const FlipRoles& roles) {
    roles.validate();
    const std::array<int, 4> cycle{roles.i, roles.j, roles.k, roles.l};
    std::array<int, 4> best{};
    bool first = true;
    for (int start = 0; start < 4; ++start) {
        for (int dir : {1, -1}) {
            std::array<int, 4> t{};
            for (int s = 0; s < 4; ++s) t[static_cast<std::size_t>(s)] = cycle[static_cast<std::size_t>((start + dir * s + 8) % 4)];
            if (first || t < best) best = t;
            first = false;
        }
    }
    return "d(" + std::to_string(best[0]) + " " + std::to_string(best[1]) + " " + std::to_string(best[2]) + " " +
           std::to_string(best[3]) + ")";
}

RationalMatrix flip_block(const FlipRoles& roles, const LabelMap& labels) {
    roles.validate();
    const Rational& zi = labels[roles.i];
    const Rational& zj = labels[roles.j];
    const Rational& zk = labels[roles.k];
    const Rational& zl = labels[roles.l];
    const Rational den = zi - zk;
    if (den.is_zero()) throw FlipError("coincident labels");
    return RationalMatrix::from_rows({{(zi - zl) / den, (zi - zj) / den}, {(zl - zk) / den, (zj - zk) / den}});
}

namespace {

std::optional<std::size_t> position_of(std::span<const Triangle> basis, const Triangle& t) {
    auto it = std::find(basis.begin(), basis.end(), t);
    if (it == basis.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basis.begin());
}

std::string describe(const FlipRoles& r) {
    return std::to_string(r.i) + std::to_string(r.k) + "->" + std::to_string(r.j) + std::to_string(r.l);
}

}  // namespace

RationalMatrix build_flip_matrix(const FlipRoles& roles, std::span<const Triangle> from,
                                 std::span<const Triangle> to, const LabelMap& labels) {
    roles.validate();
    if (from.size() != to.size())
        throw FlipError("bases of different sizes (" + std::to_string(from.size()) + " vs " +
                        std::to_string(to.size()) + ")");
    const RationalMatrix block = flip_block(roles, labels);

    const Triangle ijk = Triangle::of(roles.i, roles.j, roles.k);
    const Triangle ikl = Triangle::of(roles.i, roles.k, roles.l);
    const Triangle ijl = Triangle::of(roles.i, roles.j, roles.l);
    const Triangle jkl = Triangle::of(roles.j, roles.k, roles.l);

    const auto c_ijk = position_of(from, ijk);
    const auto c_ikl = position_of(from, ikl);
    const auto r_ijl = position_of(to, ijl);
    const auto r_jkl = position_of(to, jkl);
    if (!c_ijk || !c_ikl || !r_ijl || !r_jkl || position_of(from, ijl) || position_of(from, jkl) ||
        position_of(to, ijk) || position_of(to, ikl))
        throw FlipError("bases do not differ by the flip " + describe(roles));

    RationalMatrix out(to.size(), from.size());
    for (std::size_t col = 0; col < from.size(); ++col) {
        if (col == *c_ijk || col == *c_ikl) continue;
        const auto row = position_of(to, from[col]);
        if (!row) throw FlipError("triangle " + from[col].to_string() + " missing after flip " + describe(roles));
        out(*row, col) = 1;
    }
    out(*r_ijl, *c_ijk) = block(0, 0);
    out(*r_ijl, *c_ikl) = block(0, 1);
    out(*r_jkl, *c_ijk) = block(1, 0);
    out(*r_jkl, *c_ikl) = block(1, 1);
    return out;
}

FlipMatrix build_flip_matrix(const FlipRoles& roles, const OrderedBasis& from, const OrderedBasis& to,
                             const LabelMap& labels) {
    return FlipMatrix{build_flip_matrix(roles, from.span(), to.span(), labels), from, to};
}

std::vector<FlipStep> pentagon_cycle(int i, int j, int k, int l, int m) {
    const auto T = [](int a, int b, int c) { return Triangle::of(a, b, c); };
    std::vector<Triangle> s0{T(i, j, k), T(i, k, l), T(i, l, m)};
    std::vector<Triangle> s1{T(i, j, k), T(i, k, m), T(k, l, m)};
    std::vector<Triangle> s2{T(i, j, m), T(j, k, m), T(k, l, m)};
    std::vector<Triangle> s3{T(i, j, m), T(j, k, l), T(j, l, m)};
    std::vector<Triangle> s4{T(i, j, l), T(i, l, m), T(j, k, l)};
    return {
        {FlipRoles{i, k, l, m}, s0, s1},  // il -> km
        {FlipRoles{i, j, k, m}, s1, s2},  // ik -> jm
        {FlipRoles{k, j, m, l}, s2, s3},  // km -> jl
        {FlipRoles{j, i, m, l}, s3, s4},  // jm -> il
        {FlipRoles{j, i, l, k}, s4, s0},  // jl -> ik
    };
}

RationalMatrix path_product(std::span<const FlipStep> steps, const LabelMap& labels) {
    if (steps.empty()) throw std::invalid_argument("empty flip path");
    RationalMatrix product = RationalMatrix::identity(steps.front().from.size());
    for (const auto& step : steps) product = build_flip_matrix(step.roles, step.from, step.to, labels) * product;
    return product;
}

}  // namespace flipbraid
