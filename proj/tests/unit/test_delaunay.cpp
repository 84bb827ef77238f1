#include <gtest/gtest.h>

#include <map>
#include <set>

#include "flipbraid/braid.hpp"
#include "flipbraid/delaunay.hpp"
#include "flipbraid/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace flipbraid {
namespace {

Point2 P(long x, long y) { return {Rational(x), Rational(y)}; }
Triangle T(int a, int b, int c) { return Triangle::of(a, b, c); }

Configuration base(std::vector<Point2> interior) {
    std::vector<LabeledPoint> pts{{1, P(-10, -10), 1}, {2, P(20, -10), 2}, {3, P(0, 20), 3}};
    for (auto& p : interior) {
        const int index = static_cast<int>(pts.size()) + 1;
        pts.push_back({index, p, Rational(index)});
    }
    return Configuration(std::move(pts), {1, 2, 3});
}

TEST(Triangle, SortsAndRejectsRepeats) {
    EXPECT_EQ(T(3, 1, 2), (Triangle{1, 2, 3}));
    EXPECT_THROW(T(1, 1, 2), std::invalid_argument);
    EXPECT_EQ(T(4, 2, 7).to_string(), "(2 4 7)");
}

TEST(BuildDelaunay, CountsForSmallN) {
    EXPECT_EQ(build_delaunay(base({})).triangles(), std::vector<Triangle>{T(1, 2, 3)});
    EXPECT_EQ(build_delaunay(canonical_setup(1).configuration).size(), 3u);
    EXPECT_EQ(build_delaunay(canonical_setup(2).configuration).size(), 5u);
    EXPECT_EQ(build_delaunay(canonical_setup(5).configuration).size(), 11u);
}

TEST(BuildDelaunay, DegenerateInputCarriesSubset) {
    try {
        (void)build_delaunay(base({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
        FAIL();
    } catch (const DegenerateConfigurationError& e) {
        EXPECT_EQ(e.subset(), (std::array<int, 4>{4, 5, 6, 7}));
    }
}

TEST(BuildDelaunayProperty, MatchesBruteForceAndInvariants) {
    testing::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(testing::draw(rng, 0, 8));
        const Configuration c = testing::random_configuration(rng, n);
        const Triangulation tri = build_delaunay(c);
        ASSERT_EQ(tri.size(), static_cast<std::size_t>(2 * n + 1));
        ASSERT_TRUE(non_delaunay_triangles(c, tri).empty());
        const auto oracle = testing::brute_force_delaunay(c);
        ASSERT_TRUE(oracle.has_value());
        ASSERT_EQ(tri, *oracle);
        // boundary edges present; interior edges shared by exactly two triangles
        std::map<std::pair<int, int>, int> edges;
        for (const auto& tr : tri.triangles()) {
            ++edges[{tr.a, tr.b}];
            ++edges[{tr.a, tr.c}];
            ++edges[{tr.b, tr.c}];
        }
        for (const auto& [e, count] : edges) {
            const bool boundary = e.first <= 3 && e.second <= 3;
            ASSERT_EQ(count, boundary ? 1 : 2);
        }
        ASSERT_EQ(edges.count({1, 2}) + edges.count({1, 3}) + edges.count({2, 3}), 3u);
    }
}

TEST(BuildDelaunayProperty, InsertionOrderIndependent) {
    testing::Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        const Configuration c = testing::random_configuration(rng, static_cast<int>(testing::draw(rng, 2, 8)));
        std::vector<int> order = c.interior();
        const Triangulation reference = build_delaunay(c);
        for (int s = 0; s < 4; ++s) {
            testing::shuffle(order, rng);
            ASSERT_EQ(build_delaunay(c, order), reference);
        }
    }
}

TEST(OrderedBasis, LexicographicAndIndexOf) {
    const OrderedBasis b({T(1, 3, 4), T(1, 2, 3), T(2, 3, 4)});
    EXPECT_EQ(b.triangles(), (std::vector<Triangle>{T(1, 2, 3), T(1, 3, 4), T(2, 3, 4)}));
    EXPECT_EQ(ordered_basis(build_delaunay(base({}))).triangles(), std::vector<Triangle>{T(1, 2, 3)});
    const OrderedBasis c({T(1, 2, 3), T(1, 2, 4), T(2, 3, 4)});
    EXPECT_EQ(c.index_of(T(1, 2, 4)), 1u);
    EXPECT_FALSE(c.index_of(T(1, 3, 4)).has_value());
}

TEST(DiffFlips, EqualGivesEmpty) {
    const Triangulation t = build_delaunay(canonical_setup(3).configuration);
    ASSERT_TRUE(diff_flips(t, t).has_value());
    EXPECT_TRUE(diff_flips(t, t)->empty());
}

TEST(DiffFlips, SingleSquareFlip) {
    const Triangulation before({T(1, 2, 3), T(1, 3, 4)});
    const Triangulation after({T(1, 2, 4), T(2, 3, 4)});
    const auto flips = diff_flips(before, after);
    ASSERT_TRUE(flips && flips->size() == 1);
    EXPECT_EQ((*flips)[0].removed, (std::array<int, 2>{1, 3}));
    EXPECT_EQ((*flips)[0].inserted, (std::array<int, 2>{2, 4}));
    EXPECT_EQ((*flips)[0].quad, (std::array<int, 4>{1, 2, 3, 4}));
}

TEST(DiffFlips, TwoDisjointExchanges) {
    const Triangulation before({T(1, 2, 3), T(1, 3, 4), T(5, 6, 7), T(5, 7, 8)});
    const Triangulation after({T(1, 2, 4), T(2, 3, 4), T(5, 6, 8), T(6, 7, 8)});
    const auto flips = diff_flips(before, after);
    ASSERT_TRUE(flips && flips->size() == 2);
    EXPECT_EQ((*flips)[0].quad, (std::array<int, 4>{1, 2, 3, 4}));
    EXPECT_EQ((*flips)[1].quad, (std::array<int, 4>{5, 6, 7, 8}));
}

TEST(DiffFlips, NonFlipDifferenceIsRejected) {
    const Triangulation before({T(1, 2, 3), T(1, 3, 4), T(1, 4, 5)});
    const Triangulation after({T(1, 2, 4), T(2, 3, 5), T(3, 4, 5)});
    EXPECT_FALSE(diff_flips(before, after).has_value());
}

TEST(ApplyFlip, RoundTripAndErrors) {
    const Triangulation before({T(1, 2, 3), T(1, 3, 4)});
    const FlipEvent e = FlipEvent::make(1, 3, 2, 4);
    const Triangulation after = apply_flip(before, e);
    EXPECT_EQ(after, Triangulation({T(1, 2, 4), T(2, 3, 4)}));
    EXPECT_EQ(apply_flip(after, FlipEvent::make(2, 4, 1, 3)), before);
    EXPECT_THROW((void)apply_flip(after, e), FlipError);
    EXPECT_THROW((void)FlipEvent::make(1, 3, 1, 4), FlipError);
}

TEST(SharedVertices, Counts) {
    EXPECT_EQ(shared_vertices({1, 2, 3, 4}, {3, 4, 5, 6}), 2);
    EXPECT_EQ(shared_vertices({1, 2, 3, 4}, {1, 2, 3, 5}), 3);
}

}  // namespace
}  // namespace flipbraid
