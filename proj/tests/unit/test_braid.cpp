#include <gtest/gtest.h>

#include "flipbraid/braid.hpp"
#include "flipbraid/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace flipbraid {
namespace {

RationalMatrix eye(int n) { return RationalMatrix::identity(static_cast<std::size_t>(2 * n + 1)); }

TEST(ParseWord, Examples) {
    const BraidWord w = parse_word("b(1,3) b(2,4)^-1", 4);
    EXPECT_EQ(w.n, 4);
    EXPECT_EQ(w.letters, (std::vector<Letter>{{1, 3, 1}, {2, 4, -1}}));
    EXPECT_TRUE(parse_word("", 3).letters.empty());
    EXPECT_TRUE(parse_word("   ", 3).letters.empty());
    EXPECT_EQ(parse_word("b(1,2)^1", 2).letters, (std::vector<Letter>{{1, 2, 1}}));
    EXPECT_EQ(w.to_string(), "b(1,3) b(2,4)^-1");
}

TEST(ParseWord, ErrorsCarryPositions) {
    const auto fails_with = [](const char* text, int n, const char* fragment, std::size_t pos) {
        try {
            (void)parse_word(text, n);
            ADD_FAILURE() << text;
        } catch (const ParseError& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
            EXPECT_EQ(e.position(), pos) << text;
        }
    };
    fails_with("b(3,1)", 3, "i < j required", 0);
    fails_with("b(1,2) b(2,2)", 3, "i < j required", 7);
    fails_with("b(1,2) b(1,5)", 4, "exceeds n", 7);
    fails_with("b(0,2)", 4, "start at 1", 0);
    fails_with("b(1,2)^2", 4, "malformed token", 0);
    fails_with("b(1, 2)", 4, "malformed token", 0);
    fails_with("  x", 4, "malformed token", 2);
}

TEST(BraidWord, InverseAndConcatenation) {
    const BraidWord u = parse_word("b(1,2) b(2,3)^-1", 3);
    EXPECT_EQ(u.inverse().to_string(), "b(2,3) b(1,2)^-1");
    EXPECT_EQ(u.inverse().inverse(), u);
    EXPECT_EQ((u * u.inverse()).letters.size(), 4u);
    EXPECT_ANY_THROW((void)(u * parse_word("", 4)));
}

TEST(CanonicalSetup, Layout) {
    for (int n : {0, 1, 2, 5, 8}) {
        const auto s = canonical_setup(n);
        EXPECT_EQ(s.configuration.size(), static_cast<std::size_t>(n + 3));
        EXPECT_TRUE(validate_general_position(s.configuration).ok());
        EXPECT_EQ(build_delaunay(s.configuration).size(), static_cast<std::size_t>(2 * n + 1));
        for (int m = 1; m <= n + 3; ++m) EXPECT_EQ(s.configuration.zeta(m), Rational(m));
    }
    const auto s5 = canonical_setup(5);
    EXPECT_EQ(s5.configuration.position(1), (Point2{Rational(-9), Rational(-2)}));
    EXPECT_EQ(s5.configuration.position(2), (Point2{Rational(15), Rational(-2)}));
    EXPECT_EQ(s5.configuration.position(3), (Point2{Rational(3), Rational(24)}));
    EXPECT_EQ(s5.configuration.position(strand_point(2)).x, Rational(2));
    EXPECT_THROW((void)canonical_setup(-1), std::invalid_argument);
}

TEST(GeneratorLoop, WindsOnceAroundTargetOnly) {
    for (int n = 2; n <= 5; ++n) {
        const auto setup = canonical_setup(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int power : {1, -1}) {
                    const Letter l{i, j, power};
                    const auto loop = generator_loop(setup, l);
                    ASSERT_EQ(loop.front(), loop.back());
                    for (const auto& p : setup.configuration.points()) {
                        if (p.index == strand_point(i)) continue;
                        const int w = testing::winding_number(loop, p.position);
                        ASSERT_EQ(w, p.index == strand_point(j) ? -power : 0) << l.to_string() << " point " << p.index;
                    }
                }
    }
}

TEST(GeneratorTrajectories, OnlyStrandIMovesAndLoopCloses) {
    const auto setup = canonical_setup(4);
    const auto ts = generator_trajectories(setup, Letter{2, 4, 1});
    for (const auto& t : ts.trajectories()) EXPECT_EQ(t.is_constant(), t.index() != strand_point(2)) << t.index();
    EXPECT_EQ(configuration_at(ts, 0), setup.configuration);
    EXPECT_EQ(configuration_at(ts, 1), setup.configuration);
}

TEST(GeneratorTrajectories, RejectsLoopsThatHitOtherPoints) {
    const auto setup = canonical_setup(3);
    EXPECT_THROW((void)generator_trajectories(setup, Letter{1, 3, 1}, LoopGeometry{1, Rational(1, 2), Rational(3, 2)}),
                 ConfigurationError);
    EXPECT_THROW((void)generator_trajectories(setup, Letter{1, 3, 1}, LoopGeometry{Rational(1, 1000000), Rational(1, 2), Rational(1, 4)}),
                 ConfigurationError);
    EXPECT_ANY_THROW((void)generator_trajectories(setup, Letter{2, 1, 1}));
    EXPECT_ANY_THROW((void)generator_trajectories(setup, Letter{1, 4, 1}));
}

TEST(Invariant, EmptyWordIsIdentity) {
    for (int n : {1, 2, 3}) {
        const auto r = invariant(parse_word("", n));
        EXPECT_EQ(r.matrix, eye(n));
        EXPECT_EQ(r.basis.size(), static_cast<std::size_t>(2 * n + 1));
        EXPECT_TRUE(r.flips.events.empty());
    }
}

TEST(Invariant, GeneratorTimesInverseIsIdentity) {
    EXPECT_EQ(invariant(parse_word("b(1,2) b(1,2)^-1", 2)).matrix, eye(2));
    EXPECT_EQ(invariant(parse_word("b(1,2)^-1 b(1,2)", 2)).matrix, eye(2));
}

TEST(Invariant, GeneratorIsNotIdentity) {
    const auto r = invariant(parse_word("b(1,2)", 2));
    EXPECT_NE(r.matrix, eye(2));
    EXPECT_FALSE(r.flips.events.empty());
    EXPECT_EQ(r.letters.size(), 1u);
    EXPECT_EQ(r.flips.replay(build_delaunay(canonical_setup(2).configuration)),
              build_delaunay(canonical_setup(2).configuration));
}

TEST(Invariant, DisjointGeneratorsCommute) {
    InvariantEngine engine(4);
    EXPECT_EQ(engine.invariant(parse_word("b(1,3) b(2,4)", 4)).matrix, engine.invariant(parse_word("b(2,4) b(1,3)", 4)).matrix);
    EXPECT_EQ(engine.invariant(parse_word("b(1,2) b(3,4)", 4)).matrix, engine.invariant(parse_word("b(3,4) b(1,2)", 4)).matrix);
}

TEST(Invariant, TraceAndCharPolyAreConsistent) {
    const auto r = invariant(parse_word("b(1,3)", 3));
    const auto c = r.charpoly();
    ASSERT_EQ(c.size(), 8u);
    EXPECT_EQ(c.front(), Rational(1));
    EXPECT_EQ(c[1], -r.trace());
    EXPECT_EQ(testing::evaluate_polynomial(c, r.matrix), RationalMatrix(7, 7));
}

TEST(Invariant, WholeWordAndInverseByMatrixModesAgree) {
    const BraidWord w = parse_word("b(1,2) b(2,3)^-1 b(1,3)", 3);
    InvariantOptions whole;
    whole.whole_word = true;
    InvariantOptions by_matrix;
    by_matrix.inverse_by_matrix = true;
    const auto reference = invariant(w).matrix;
    EXPECT_EQ(invariant(w, whole).matrix, reference);
    EXPECT_EQ(invariant(w, by_matrix).matrix, reference);
}

TEST(InvariantProperty, HomomorphismAndColumnSums) {
    testing::Rng rng(61);
    InvariantEngine engine(4);
    for (int t = 0; t < 20; ++t) {
        const auto random_word = [&](int length) {
            BraidWord w{4, {}};
            for (int k = 0; k < length; ++k) {
                const int i = static_cast<int>(testing::draw(rng, 1, 3));
                const int j = static_cast<int>(testing::draw(rng, i + 1, 4));
                w.letters.push_back(Letter{i, j, testing::draw(rng, 0, 1) == 0 ? 1 : -1});
            }
            return w;
        };
        const BraidWord u = random_word(static_cast<int>(testing::draw(rng, 0, 3)));
        const BraidWord v = random_word(static_cast<int>(testing::draw(rng, 0, 3)));
        const auto uv = engine.invariant(u * v);
        ASSERT_EQ(uv.matrix, engine.invariant(v).matrix * engine.invariant(u).matrix) << (u * v).to_string();
        ASSERT_EQ(uv.matrix.rows(), 9u);
        for (const auto& s : column_sums(uv.matrix)) ASSERT_EQ(s, Rational(1));
        ASSERT_EQ(engine.invariant((u * v).inverse()).matrix, mat_inverse(uv.matrix));
    }
}

TEST(InvariantProperty, EveryFlipMatrixHasUnitColumnSums) {
    std::size_t seen = 0;
    InvariantOptions options;
    options.on_flip_matrix = [&](const FlipMatrix& m) {
        ++seen;
        for (const auto& s : column_sums(m.matrix)) ASSERT_EQ(s, Rational(1));
    };
    (void)invariant(parse_word("b(1,3) b(2,3)^-1 b(1,2)", 3), options);
    EXPECT_GT(seen, 10u);
}

TEST(Isotopy, LoopGeometryAndStepDoNotMatter) {
    const BraidWord w = parse_word("b(1,3)", 3);
    InvariantOptions wide;
    wide.loop = LoopGeometry{Rational(3, 2), Rational(1, 2), Rational(1, 8)};
    wide.kinetics.step = Rational(1, 32);
    EXPECT_EQ(invariant(w, wide).matrix, invariant(w).matrix);
}

TEST(FlipProduct, ObserverSeesEveryFlip) {
    const auto setup = canonical_setup(2);
    const auto seq = extract_flip_sequence(generator_trajectories(setup, Letter{1, 2, 1}));
    std::size_t seen = 0;
    const auto [m, end] = flip_product(build_delaunay(setup.configuration), seq, LabelMap(setup.configuration),
                                       [&](const FlipMatrix&) { ++seen; });
    EXPECT_EQ(seen, seq.events.size());
    EXPECT_EQ(end, build_delaunay(setup.configuration));
}

}  // namespace
}  // namespace flipbraid
