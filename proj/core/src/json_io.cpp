#include "flipbraid/json_io.hpp"

#include <algorithm>

#include "flipbraid/errors.hpp"
#include "flipbraid/flip_algebra.hpp"

namespace flipbraid::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError("json: " + what, 0); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    return j;
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

template <std::size_t N>
std::array<int, N> int_array(const Json& j, const char* what) {
    array(j, what);
    if (j.size() != N) fail(std::string(what) + " must have " + std::to_string(N) + " entries");
    std::array<int, N> out{};
    for (std::size_t k = 0; k < N; ++k) out[k] = integer(j[k], what);
    return out;
}

Json triangle(const Triangle& t) { return Json::array({t.a, t.b, t.c}); }

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail("rational must be a \"p/q\" string or an integer");
}

Json to_json(const RationalMatrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const Json& j) {
    const int rows = integer(field(j, "rows"), "rows");
    const int cols = integer(field(j, "cols"), "cols");
    const Json& entries = array(field(j, "entries"), "entries");
    if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows))
        fail("entries must have \"rows\" rows");
    std::vector<Rational> flat;
    flat.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) fail("every row must have \"cols\" entries");
        for (const auto& e : row) flat.push_back(rational_from_json(e));
    }
    return RationalMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(flat));
}

Json to_json(const Configuration& c) {
    Json points = Json::array();
    for (const auto& p : c.points())
        points.push_back(Json{{"index", p.index}, {"x", to_json(p.position.x)}, {"y", to_json(p.position.y)},
                              {"zeta", to_json(p.zeta)}});
    return Json{{"points", std::move(points)}, {"boundary", c.boundary()}};
}

Configuration configuration_from_json(const Json& j) {
    std::vector<LabeledPoint> points;
    for (const auto& p : array(field(j, "points"), "points")) {
        points.push_back(LabeledPoint{integer(field(p, "index"), "index"),
                                      {rational_from_json(field(p, "x")), rational_from_json(field(p, "y"))},
                                      rational_from_json(field(p, "zeta"))});
    }
    return Configuration(std::move(points), int_array<3>(field(j, "boundary"), "boundary"));
}

Json to_json(const Triangulation& t) {
    Json tris = Json::array();
    for (const auto& tri : t.triangles()) tris.push_back(triangle(tri));
    return Json{{"triangles", std::move(tris)}};
}

Triangulation triangulation_from_json(const Json& j) {
    std::vector<Triangle> tris;
    for (const auto& t : array(field(j, "triangles"), "triangles")) {
        const auto v = int_array<3>(t, "triangle");
        tris.push_back(Triangle::of(v[0], v[1], v[2]));
    }
    return Triangulation(std::move(tris));
}

Json to_json(const OrderedBasis& b) {
    Json out = Json::array();
    for (const auto& t : b.triangles()) out.push_back(triangle(t));
    return out;
}

Json to_json(const FlipEvent& e) {
    Json out{{"removed", e.removed},
             {"inserted", e.inserted},
             {"quad", e.quad},
             {"gamma", gamma_generator_name(canonical_roles(e))}};
    if (e.bracket) {
        out["t_lo"] = to_json(e.bracket->first);
        out["t_hi"] = to_json(e.bracket->second);
    }
    return out;
}

FlipEvent flip_event_from_json(const Json& j) {
    const auto removed = int_array<2>(field(j, "removed"), "removed");
    const auto inserted = int_array<2>(field(j, "inserted"), "inserted");
    FlipEvent e = FlipEvent::make(removed[0], removed[1], inserted[0], inserted[1]);
    if (j.contains("quad") && int_array<4>(j["quad"], "quad") != e.quad) fail("quad disagrees with the diagonals");
    const bool lo = j.contains("t_lo");
    const bool hi = j.contains("t_hi");
    if (lo != hi) fail("t_lo and t_hi must appear together");
    if (lo) e.bracket = std::make_pair(rational_from_json(j["t_lo"]), rational_from_json(j["t_hi"]));
    return e;
}

Json to_json(const FlipSequence& s) {
    Json out = Json::array();
    for (const auto& e : s.events) out.push_back(to_json(e));
    return out;
}

FlipSequence flip_sequence_from_json(const Json& j) {
    FlipSequence s;
    for (const auto& e : array(j, "flip sequence")) s.events.push_back(flip_event_from_json(e));
    return s;
}

Json to_json(const TrajectorySet& ts) {
    Json zeta = Json::array();
    for (const auto& p : ts.base().points()) zeta.push_back(to_json(p.zeta));
    Json trajectories = Json::array();
    for (const auto& tr : ts.trajectories()) {
        Json bps = Json::array();
        for (const auto& bp : tr.breakpoints())
            bps.push_back(Json::array({to_json(bp.time), to_json(bp.position.x), to_json(bp.position.y)}));
        trajectories.push_back(Json{{"index", tr.index()}, {"breakpoints", std::move(bps)}});
    }
    return Json{{"boundary", ts.base().boundary()}, {"zeta", std::move(zeta)}, {"trajectories", std::move(trajectories)}};
}

TrajectorySet trajectories_from_json(const Json& j) {
    std::vector<Trajectory> trajectories;
    for (const auto& t : array(field(j, "trajectories"), "trajectories")) {
        std::vector<Breakpoint> bps;
        for (const auto& b : array(field(t, "breakpoints"), "breakpoints")) {
            if (!b.is_array() || b.size() != 3) fail("breakpoint must be [\"t\", \"x\", \"y\"]");
            bps.push_back(Breakpoint{rational_from_json(b[0]), {rational_from_json(b[1]), rational_from_json(b[2])}});
        }
        trajectories.emplace_back(integer(field(t, "index"), "index"), std::move(bps));
    }
    std::sort(trajectories.begin(), trajectories.end(),
              [](const Trajectory& a, const Trajectory& b) { return a.index() < b.index(); });
    const std::array<int, 3> boundary = j.contains("boundary") ? int_array<3>(j["boundary"], "boundary")
                                                               : std::array<int, 3>{1, 2, 3};
    std::vector<LabeledPoint> points;
    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        Rational zeta(trajectories[k].index());
        if (j.contains("zeta")) {
            const Json& z = array(j["zeta"], "zeta");
            if (z.size() != trajectories.size()) fail("zeta must label every point");
            zeta = rational_from_json(z[k]);
        }
        points.push_back({trajectories[k].index(), trajectories[k].breakpoints().front().position, zeta});
    }
    return TrajectorySet(Configuration(std::move(points), boundary), std::move(trajectories));
}

Json to_json(const InvariantResult& r, const BraidWord& word, const InvariantJsonOptions& options) {
    Json out{{"n", r.n}, {"word", word.to_string()}, {"basis", to_json(r.basis)}, {"matrix", to_json(r.matrix)}};
    if (options.trace) out["trace"] = to_json(r.trace());
    if (options.charpoly) {
        Json coeffs = Json::array();
        for (const auto& c : r.charpoly()) coeffs.push_back(to_json(c));
        out["charpoly"] = std::move(coeffs);
    }
    if (options.flips) out["flips"] = to_json(r.flips);
    return out;
}

Json to_json(const RelationReport& r) {
    Json instances = Json::array();
    for (const auto& inst : r.instances) {
        Json item{{"name", inst.name}, {"passed", inst.passed}};
        if (!inst.passed) {
            item["detail"] = inst.detail;
            Json sides = Json::array();
            for (const auto& m : inst.sides) sides.push_back(to_json(m));
            item["sides"] = std::move(sides);
        }
        instances.push_back(std::move(item));
    }
    return Json{{"family", to_string(r.family)},
                {"n", r.n},
                {"passed", r.all_passed()},
                {"instances", std::move(instances)}};
}

}  // namespace flipbraid::json
