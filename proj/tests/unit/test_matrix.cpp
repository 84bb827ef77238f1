#include <gtest/gtest.h>

#include "flipbraid/errors.hpp"
#include "flipbraid/matrix.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace flipbraid {
namespace {

RationalMatrix m2(Rational a, Rational b, Rational c, Rational d) { return RationalMatrix::from_rows({{a, b}, {c, d}}); }

const RationalMatrix kBlock = m2(Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(1, 2));
const RationalMatrix kBlockInverse = m2(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2));

TEST(Matrix, IdentityTimesMatrix) {
    testing::Rng rng(1);
    const RationalMatrix m = testing::random_matrix(rng, 3, 3);
    EXPECT_EQ(RationalMatrix::identity(3) * m, m);
}

TEST(Matrix, FlipBlockTimesReverseBlockIsIdentity) { EXPECT_TRUE((kBlockInverse * kBlock).is_identity()); }

TEST(Matrix, DimensionMismatchNamesShapes) {
    try {
        (void)mat_mul(RationalMatrix(2, 3), RationalMatrix(2, 3));
        FAIL();
    } catch (const DimensionError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("2x3"), std::string::npos) << what;
    }
}

TEST(Matrix, RaggedRowsRejected) {
    EXPECT_ANY_THROW(RationalMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(3)}}));
}

TEST(Matrix, Inverse) {
    EXPECT_EQ(mat_inverse(RationalMatrix::identity(4)), RationalMatrix::identity(4));
    EXPECT_EQ(mat_inverse(kBlock), kBlockInverse);
}

TEST(Matrix, SingularInverseThrows) {
    EXPECT_THROW(mat_inverse(m2(1, 2, 2, 4)), SingularMatrixError);
    EXPECT_THROW(mat_inverse(RationalMatrix(2, 3)), DimensionError);
}

TEST(Matrix, InverseNeedsRowSwap) {
    const RationalMatrix p = m2(0, 1, 1, 0);
    EXPECT_EQ(mat_inverse(p), p);
}

TEST(Matrix, CharPolyOfIdentityIsBinomial) {
    const auto c = char_poly(RationalMatrix::identity(11));
    ASSERT_EQ(c.size(), 12u);
    long binom = 1;
    for (long k = 0; k <= 11; ++k) {
        EXPECT_EQ(c[static_cast<std::size_t>(k)], Rational(k % 2 == 0 ? binom : -binom)) << k;
        binom = binom * (11 - k) / (k + 1);
    }
    EXPECT_EQ(trace(RationalMatrix::identity(11)), Rational(11));
}

TEST(Matrix, CharPolyOfFlipBlock) {
    EXPECT_EQ(char_poly(kBlock), (std::vector<Rational>{1, -2, 1}));
    EXPECT_THROW(char_poly(RationalMatrix(2, 3)), DimensionError);
}

TEST(Matrix, ColumnSumsAndFirstDifference) {
    EXPECT_EQ(column_sums(kBlock), (std::vector<Rational>{1, 1}));
    RationalMatrix other = kBlock;
    other(1, 0) = Rational(7);
    EXPECT_EQ(first_difference(kBlock, other), (std::pair<long, long>{1, 0}));
    EXPECT_EQ(first_difference(kBlock, kBlock), (std::pair<long, long>{-1, -1}));
}

TEST(MatrixProperty, ProductIsAssociative) {
    testing::Rng rng(2);
    for (int t = 0; t < 25; ++t) {
        const auto k = static_cast<std::size_t>(testing::draw(rng, 1, 12));
        const auto a = testing::random_matrix(rng, k, k);
        const auto b = testing::random_matrix(rng, k, k);
        const auto c = testing::random_matrix(rng, k, k);
        ASSERT_EQ((a * b) * c, a * (b * c)) << "size " << k;
    }
}

TEST(MatrixProperty, InverseOfInverse) {
    testing::Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        const auto k = static_cast<std::size_t>(testing::draw(rng, 1, 9));
        const auto a = testing::random_nonsingular(rng, k);
        const auto inv = mat_inverse(a);
        ASSERT_TRUE((a * inv).is_identity());
        ASSERT_TRUE((inv * a).is_identity());
        ASSERT_EQ(mat_inverse(inv), a);
    }
}

TEST(MatrixProperty, CayleyHamilton) {
    testing::Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        const auto a = testing::random_matrix(rng, 4, 4);
        const auto c = char_poly(a);
        ASSERT_EQ(c.front(), Rational(1));
        ASSERT_EQ(c[1], -trace(a));
        const auto p = testing::evaluate_polynomial(c, a);
        ASSERT_EQ(p, RationalMatrix(4, 4));
        // constant term is (-1)^k det(A)
        ASSERT_EQ(c.back(), testing::determinant(a));
    }
}

}  // namespace
}  // namespace flipbraid
