#include "flipbraid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "flipbraid/errors.hpp"

namespace flipbraid {

std::string Letter::to_string() const {
    std::string s = "b(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (power == -1) s += "^-1";
    return s;
}

BraidWord BraidWord::inverse() const {
    BraidWord out{n, {}};
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
    return out;
}

std::string BraidWord::to_string() const {
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += l.to_string();
    }
    return s;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
    if (u.n != v.n) throw std::invalid_argument("cannot concatenate words on different strand counts");
    BraidWord out = u;
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

BraidWord parse_word(std::string_view text, int n) {
    static const std::regex token_re(R"(b\((\d+),(\d+)\)(\^-1|\^1)?)");
    BraidWord word{n, {}};
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string token(text.substr(start, pos - start));
        std::smatch m;
        if (!std::regex_match(token, m, token_re))
            throw ParseError("malformed token '" + token + "', expected b(i,j) or b(i,j)^-1", start);
        if (m[1].length() > 6 || m[2].length() > 6) throw ParseError("strand index too large in '" + token + "'", start);
        const int i = std::stoi(m[1].str());
        const int j = std::stoi(m[2].str());
        if (i >= j) throw ParseError("i < j required in '" + token + "'", start);
        if (i < 1) throw ParseError("strand indices start at 1 in '" + token + "'", start);
        if (j > n) throw ParseError("strand " + std::to_string(j) + " exceeds n = " + std::to_string(n), start);
        word.letters.push_back(Letter{i, j, m[3].str() == "^-1" ? -1 : 1});
    }
    return word;
}

namespace {

Configuration canonical_configuration(int n, int round) {
    std::vector<LabeledPoint> pts;
    const long nn = n;
    pts.push_back({1, {Rational(-(nn + 4)), Rational(-2)}, Rational(1)});
    pts.push_back({2, {Rational(2 * nn + 5), Rational(-2)}, Rational(2)});
    pts.push_back({3, {Rational(nn + 1, 2), Rational(3 * nn + 9)}, Rational(3)});
    for (long k = 1; k <= nn; ++k) {
        Rational y(k * k, 100 * nn * nn);
        if (round > 0) y += Rational(round * k * k * k, 10000 * nn * nn * nn * (round + 1));
        const int index = strand_point(static_cast<int>(k));
        pts.push_back({index, {Rational(k), y}, Rational(index)});
    }
    return Configuration(std::move(pts), {1, 2, 3});
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (orient2d(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

}  // namespace

CanonicalSetup canonical_setup(int n) {
    if (n < 0) throw std::invalid_argument("strand count must be non-negative");
    constexpr int max_rounds = 16;
    for (int round = 0; round <= max_rounds; ++round) {
        Configuration config = canonical_configuration(n, round);
        if (validate_general_position(config).ok()) return CanonicalSetup{n, std::move(config), round};
    }
    throw ConfigurationError("canonical configuration for n = " + std::to_string(n) +
                             " is not in general position after nudging");
}

std::vector<Point2> generator_loop(const CanonicalSetup& setup, const Letter& letter, const LoopGeometry& loop) {
    if (letter.i < 1 || letter.i >= letter.j || letter.j > setup.n)
        throw std::invalid_argument("generator " + letter.to_string() + " invalid for n = " + std::to_string(setup.n));
    if (letter.power != 1 && letter.power != -1) throw std::invalid_argument("letter power must be +1 or -1");
    if (loop.height <= Rational(0) || loop.depth <= Rational(0) || loop.margin <= Rational(0))
        throw std::invalid_argument("loop height, depth and margin must be positive");

    const Configuration& config = setup.configuration;
    const int pi = strand_point(letter.i);
    const int pj = strand_point(letter.j);
    const Point2 home = config.position(pi);
    const Point2& target = config.position(pj);
    const Rational& h = loop.height;
    const Rational lo = -loop.depth;
    const Rational right = target.x + loop.margin;
    const Rational left = target.x - loop.margin;

    std::vector<Point2> corners{home,          {home.x, h}, {right, h}, {right, lo}, {left, lo},
                                {left, h},     {home.x, h}, home};

    const auto inside_rect = [&](const Point2& p) { return left <= p.x && p.x <= right && lo <= p.y && p.y <= h; };
    if (!(left < target.x && target.x < right && lo < target.y && target.y < h))
        throw ConfigurationError("loop of " + letter.to_string() + " does not enclose strand " + std::to_string(letter.j));
    if (!(home.y < h) || !(home.x < left || home.x > right))
        throw ConfigurationError("loop of " + letter.to_string() + " does not start outside its rectangle");
    for (const auto& p : config.points()) {
        if (p.index == pi) continue;
        if (p.index != pj && inside_rect(p.position))
            throw ConfigurationError("loop of " + letter.to_string() + " encloses point " + std::to_string(p.index));
        for (std::size_t s = 0; s + 1 < corners.size(); ++s) {
            if (on_segment(p.position, corners[s], corners[s + 1]))
                throw ConfigurationError("loop of " + letter.to_string() + " touches point " + std::to_string(p.index));
        }
    }
    if (letter.power == -1) std::reverse(corners.begin(), corners.end());
    return corners;
}

TrajectorySet generator_trajectories(const CanonicalSetup& setup, const Letter& letter, const LoopGeometry& loop) {
    const std::vector<Point2> corners = generator_loop(setup, letter, loop);
    std::vector<Rational> cumulative{Rational(0)};
    for (std::size_t s = 1; s < corners.size(); ++s) {
        const Rational dx = corners[s].x - corners[s - 1].x;
        const Rational dy = corners[s].y - corners[s - 1].y;
        cumulative.push_back(cumulative.back() + (dx.sign() < 0 ? -dx : dx) + (dy.sign() < 0 ? -dy : dy));
    }
    const Rational total = cumulative.back();
    std::vector<Breakpoint> breakpoints;
    for (std::size_t s = 0; s < corners.size(); ++s) breakpoints.push_back({cumulative[s] / total, corners[s]});

    const int mover = strand_point(letter.i);
    std::vector<Trajectory> trajectories;
    for (const auto& p : setup.configuration.points()) {
        if (p.index == mover)
            trajectories.emplace_back(p.index, breakpoints);
        else
            trajectories.push_back(Trajectory::stationary(p.index, p.position));
    }
    return TrajectorySet(setup.configuration, std::move(trajectories));
}

TrajectorySet word_trajectories(const CanonicalSetup& setup, const BraidWord& word, const LoopGeometry& loop) {
    if (word.letters.empty()) return TrajectorySet::stationary(setup.configuration);
    std::vector<TrajectorySet> parts;
    parts.reserve(word.letters.size());
    for (const auto& l : word.letters) parts.push_back(generator_trajectories(setup, l, loop));
    return concatenate(parts);
}

Rational InvariantResult::trace() const { return flipbraid::trace(matrix); }

std::vector<Rational> InvariantResult::charpoly() const { return char_poly(matrix); }

std::pair<RationalMatrix, Triangulation> flip_product(const Triangulation& start, const FlipSequence& flips,
                                                      const LabelMap& labels,
                                                      const std::function<void(const FlipMatrix&)>& observer) {
    Triangulation current = start;
    OrderedBasis from = ordered_basis(current);
    RationalMatrix product = RationalMatrix::identity(current.size());
    for (const auto& e : flips.events) {
        Triangulation next = apply_flip(current, e);
        OrderedBasis to = ordered_basis(next);
        FlipMatrix fm = build_flip_matrix(canonical_roles(e), from, to, labels);
        if (observer) observer(fm);
        product = fm.matrix * product;
        current = std::move(next);
        from = std::move(to);
    }
    return {std::move(product), std::move(current)};
}

InvariantEngine::InvariantEngine(int n, InvariantOptions options)
    : setup_(canonical_setup(n)), options_(std::move(options)), initial_(build_delaunay(setup_.configuration)),
      labels_(setup_.configuration) {}

const LetterRecord& InvariantEngine::letter(const Letter& l) {
    auto it = cache_.find(l);
    if (it == cache_.end()) it = cache_.emplace(l, simulate(l)).first;
    return it->second;
}

LetterRecord InvariantEngine::simulate(const Letter& l) {
    if (options_.inverse_by_matrix && l.power == -1) {
        const LetterRecord& forward = letter(l.inverse());
        FlipSequence reversed;
        for (auto it = forward.flips.events.rbegin(); it != forward.flips.events.rend(); ++it) {
            FlipEvent e = *it;
            std::swap(e.removed, e.inserted);
            if (e.bracket) e.bracket = std::make_pair(Rational(1) - e.bracket->second, Rational(1) - e.bracket->first);
            reversed.events.push_back(std::move(e));
        }
        return LetterRecord{l, std::move(reversed), mat_inverse(forward.matrix)};
    }
    const TrajectorySet ts = generator_trajectories(setup_, l, options_.loop);
    FlipSequence flips = extract_flip_sequence(ts, options_.kinetics);
    auto [matrix, end] = flip_product(initial_, flips, labels_, options_.on_flip_matrix);
    if (end != initial_) throw KineticsError("flips of " + l.to_string() + " do not close up");
    return LetterRecord{l, std::move(flips), std::move(matrix)};
}

InvariantResult InvariantEngine::invariant(const BraidWord& word) {
    if (word.n != setup_.n)
        throw std::invalid_argument("word on " + std::to_string(word.n) + " strands given to an engine for n = " +
                                    std::to_string(setup_.n));
    InvariantResult result;
    result.n = setup_.n;
    result.basis = ordered_basis(initial_);

    if (options_.whole_word) {
        const TrajectorySet ts = word_trajectories(setup_, word, options_.loop);
        result.flips = extract_flip_sequence(ts, options_.kinetics);
        auto [matrix, end] = flip_product(initial_, result.flips, labels_, options_.on_flip_matrix);
        if (end != initial_) throw KineticsError("flips of the word do not close up");
        result.matrix = std::move(matrix);
        return result;
    }

    result.matrix = RationalMatrix::identity(initial_.size());
    const auto count = static_cast<long>(word.letters.size());
    for (long p = 0; p < count; ++p) {
        const LetterRecord& rec = letter(word.letters[static_cast<std::size_t>(p)]);
        result.matrix = rec.matrix * result.matrix;
        for (FlipEvent e : rec.flips.events) {
            if (e.bracket)
                e.bracket = std::make_pair((Rational(p) + e.bracket->first) / Rational(count),
                                           (Rational(p) + e.bracket->second) / Rational(count));
            result.flips.events.push_back(std::move(e));
        }
        result.letters.push_back(rec);
    }
    return result;
}

InvariantResult invariant(const BraidWord& word, const InvariantOptions& options) {
    InvariantEngine engine(word.n, options);
    return engine.invariant(word);
}

}  // namespace flipbraid
