#include "flipbraid/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "flipbraid/errors.hpp"

namespace flipbraid {

Triangle Triangle::of(int i, int j, int k) {
    std::array<int, 3> v{i, j, k};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw std::invalid_argument("triangle with repeated vertex " + std::to_string(v[1]));
    return Triangle{v[0], v[1], v[2]};
}

std::string Triangle::to_string() const {
    return "(" + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + ")";
}

OrderedBasis::OrderedBasis(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
    std::sort(triangles_.begin(), triangles_.end());
}

std::optional<std::size_t> OrderedBasis::index_of(const Triangle& t) const {
    auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
    if (it == triangles_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - triangles_.begin());
}

FlipEvent FlipEvent::make(int i, int k, int j, int l) {
    FlipEvent e;
    e.removed = {std::min(i, k), std::max(i, k)};
    e.inserted = {std::min(j, l), std::max(j, l)};
    e.quad = {i, j, k, l};
    std::sort(e.quad.begin(), e.quad.end());
    if (std::adjacent_find(e.quad.begin(), e.quad.end()) != e.quad.end())
        throw FlipError("flip quadrilateral needs four distinct vertices");
    return e;
}

Triangulation::Triangulation(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
    std::sort(triangles_.begin(), triangles_.end());
    if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
        throw std::invalid_argument("duplicate triangle in triangulation");
}

bool Triangulation::contains(const Triangle& t) const {
    return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

namespace {

using Oriented = std::array<int, 3>;  // counterclockwise vertex order

Triangulation finish(const Configuration& config, const std::vector<Oriented>& working) {
    std::vector<Triangle> keys;
    keys.reserve(working.size());
    for (const auto& t : working) keys.push_back(Triangle::of(t[0], t[1], t[2]));
    Triangulation result(std::move(keys));

    const int m = static_cast<int>(config.size());
    for (const auto& t : working) {
        const Point2& a = config.position(t[0]);
        const Point2& b = config.position(t[1]);
        const Point2& c = config.position(t[2]);
        for (int v = 1; v <= m; ++v) {
            if (v == t[0] || v == t[1] || v == t[2]) continue;
            const int s = incircle(a, b, c, config.position(v));
            if (s > 0) throw std::logic_error("Bowyer-Watson produced a non-Delaunay triangle");
            if (s == 0) {
                std::array<int, 4> subset{t[0], t[1], t[2], v};
                std::sort(subset.begin(), subset.end());
                throw DegenerateConfigurationError(subset);
            }
        }
    }
    return result;
}

}  // namespace

Triangulation build_delaunay(const Configuration& config) {
    const std::vector<int> order = config.interior();
    return build_delaunay(config, order);
}

Triangulation build_delaunay(const Configuration& config, std::span<const int> insertion_order) {
    auto [b0, b1, b2] = config.boundary();
    if (orient2d(config.position(b0), config.position(b1), config.position(b2)) < 0) std::swap(b1, b2);
    std::vector<Oriented> working{{b0, b1, b2}};

    std::vector<int> seen(config.size() + 1, 0);
    for (int b : config.boundary()) seen[static_cast<std::size_t>(b)] = 1;

    std::vector<Oriented> keep;
    std::vector<std::pair<int, int>> cavity_edges;
    for (int p : insertion_order) {
        if (p < 1 || p > static_cast<int>(config.size()) || seen[static_cast<std::size_t>(p)]++)
            throw std::invalid_argument("insertion order must list each interior point once");
        const Point2& pp = config.position(p);

        keep.clear();
        cavity_edges.clear();
        for (const auto& t : working) {
            if (incircle(config.position(t[0]), config.position(t[1]), config.position(t[2]), pp) > 0) {
                cavity_edges.emplace_back(t[0], t[1]);
                cavity_edges.emplace_back(t[1], t[2]);
                cavity_edges.emplace_back(t[2], t[0]);
            } else {
                keep.push_back(t);
            }
        }
        // Edges shared by two cavity triangles appear once in each direction.
        for (const auto& [u, v] : cavity_edges) {
            const bool interior_edge =
                std::find(cavity_edges.begin(), cavity_edges.end(), std::make_pair(v, u)) != cavity_edges.end();
            if (interior_edge) continue;
            if (orient2d(config.position(u), config.position(v), pp) <= 0)
                throw std::logic_error("Bowyer-Watson cavity is not star-shaped");
            keep.push_back({u, v, p});
        }
        working.swap(keep);
    }
    if (std::count(seen.begin() + 1, seen.end(), 0) != 0)
        throw std::invalid_argument("insertion order must list every interior point");
    return finish(config, working);
}

OrderedBasis ordered_basis(const Triangulation& t) { return OrderedBasis(t.triangles()); }

int shared_vertices(const std::array<int, 4>& p, const std::array<int, 4>& q) {
    int count = 0;
    for (int v : p) count += static_cast<int>(std::count(q.begin(), q.end(), v));
    return count;
}

std::optional<std::vector<FlipEvent>> diff_flips(const Triangulation& before, const Triangulation& after) {
    std::vector<Triangle> gone;
    std::vector<Triangle> fresh;
    std::set_difference(before.triangles().begin(), before.triangles().end(), after.triangles().begin(),
                        after.triangles().end(), std::back_inserter(gone));
    std::set_difference(after.triangles().begin(), after.triangles().end(), before.triangles().begin(),
                        before.triangles().end(), std::back_inserter(fresh));
    std::vector<FlipEvent> events;
    if (gone.empty() && fresh.empty()) return events;
    if (gone.size() != fresh.size() || gone.size() % 2 != 0) return std::nullopt;

    struct Candidate {
        std::size_t r1, r2, a1, a2;
        FlipEvent event;
    };
    std::vector<Candidate> candidates;
    for (std::size_t x = 0; x < gone.size(); ++x) {
        for (std::size_t y = x + 1; y < gone.size(); ++y) {
            const auto vx = gone[x].vertices();
            const auto vy = gone[y].vertices();
            std::vector<int> common;
            std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::back_inserter(common));
            if (common.size() != 2) continue;
            const int i = common[0];
            const int k = common[1];
            const int j = gone[x].a + gone[x].b + gone[x].c - i - k;
            const int l = gone[y].a + gone[y].b + gone[y].c - i - k;
            const Triangle n1 = Triangle::of(i, j, l);
            const Triangle n2 = Triangle::of(j, k, l);
            auto f1 = std::find(fresh.begin(), fresh.end(), n1);
            auto f2 = std::find(fresh.begin(), fresh.end(), n2);
            if (f1 == fresh.end() || f2 == fresh.end()) continue;
            candidates.push_back({x, y, static_cast<std::size_t>(f1 - fresh.begin()),
                                  static_cast<std::size_t>(f2 - fresh.begin()), FlipEvent::make(i, k, j, l)});
        }
    }
    // Require an exact, unambiguous cover of both sides.
    std::vector<int> gone_used(gone.size(), 0);
    std::vector<int> fresh_used(fresh.size(), 0);
    for (const auto& c : candidates) {
        ++gone_used[c.r1];
        ++gone_used[c.r2];
        ++fresh_used[c.a1];
        ++fresh_used[c.a2];
    }
    const auto exactly_once = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int n) { return n == 1; });
    };
    if (!exactly_once(gone_used) || !exactly_once(fresh_used)) return std::nullopt;

    for (auto& c : candidates) events.push_back(std::move(c.event));
    std::sort(events.begin(), events.end(),
              [](const FlipEvent& a, const FlipEvent& b) { return a.quad < b.quad; });
    return events;
}

Triangulation apply_flip(const Triangulation& t, const FlipEvent& flip) {
    const auto [i, k] = flip.removed;
    const auto [j, l] = flip.inserted;
    const Triangle old1 = Triangle::of(i, j, k);
    const Triangle old2 = Triangle::of(i, k, l);
    const Triangle new1 = Triangle::of(i, j, l);
    const Triangle new2 = Triangle::of(j, k, l);
    if (!t.contains(old1) || !t.contains(old2))
        throw FlipError("flip " + std::to_string(i) + std::to_string(k) + "->" + std::to_string(j) +
                        std::to_string(l) + " does not apply: triangles " + old1.to_string() + " and " +
                        old2.to_string() + " are not both present");
    if (t.contains(new1) || t.contains(new2))
        throw FlipError("flip target triangles already present");
    std::vector<Triangle> out;
    out.reserve(t.size());
    for (const auto& tri : t.triangles())
        if (tri != old1 && tri != old2) out.push_back(tri);
    out.push_back(new1);
    out.push_back(new2);
    return Triangulation(std::move(out));
}

std::vector<Triangle> non_delaunay_triangles(const Configuration& config, const Triangulation& t) {
    std::vector<Triangle> bad;
    const int m = static_cast<int>(config.size());
    for (const auto& tri : t.triangles()) {
        for (int v = 1; v <= m; ++v) {
            if (tri.contains(v)) continue;
            if (incircle(config.position(tri.a), config.position(tri.b), config.position(tri.c),
                         config.position(v)) > 0) {
                bad.push_back(tri);
                break;
            }
        }
    }
    return bad;
}

}  // namespace flipbraid
