#include <gtest/gtest.h>

#include <set>

#include "flipbraid/relations.hpp"

namespace flipbraid {
namespace {

TEST(RelationFamily, NamesRoundTrip) {
    for (auto f : {RelationFamily::inverse, RelationFamily::far_comm, RelationFamily::pentagon, RelationFamily::pb_all})
        EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_FALSE(parse_family("braid").has_value());
}

TEST(PureBraidRelations, InstanceCounts) {
    EXPECT_TRUE(pure_braid_relations(2).empty());
    const auto n3 = pure_braid_relations(3);
    ASSERT_EQ(n3.size(), 1u);
    EXPECT_EQ(n3[0].sides.size(), 3u);
    EXPECT_EQ(n3[0].name, "pb2 b(1,2) b(1,3) b(2,3) = b(2,3) b(1,2) b(1,3) = b(1,3) b(2,3) b(1,2)");
    const auto n4 = pure_braid_relations(4);
    std::size_t pb1 = 0, pb2 = 0, pb3 = 0;
    std::set<std::string> names;
    for (const auto& r : n4) {
        names.insert(r.name);
        pb1 += r.name.rfind("pb1", 0) == 0;
        pb2 += r.name.rfind("pb2", 0) == 0;
        pb3 += r.name.rfind("pb3", 0) == 0;
    }
    EXPECT_EQ(names.size(), n4.size());
    // Disjoint or nested generator pairs at n = 4: (12,34), (14,23).
    EXPECT_EQ(pb1, 2u);
    EXPECT_EQ(pb2, 4u);
    EXPECT_EQ(pb3, 1u);
}

TEST(VerifyRelations, AlgebraicFamiliesPass) {
    VerifyOptions options;
    options.trials = 30;
    for (auto f : {RelationFamily::pentagon, RelationFamily::far_comm}) {
        const auto report = verify_relations(3, f, options);
        EXPECT_TRUE(report.all_passed()) << to_string(f);
        EXPECT_FALSE(report.instances.empty());
    }
}

TEST(VerifyRelations, InverseFamilyAtTwoStrands) {
    VerifyOptions options;
    options.trials = 20;
    const auto report = verify_relations(2, RelationFamily::inverse, options);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.failures(), 0u);
    EXPECT_EQ(report.instances.size(), 2u * 20u + 2u);
}

TEST(VerifyRelations, PureBraidRelationsAtThreeStrands) {
    const auto report = verify_relations(3, RelationFamily::pb_all);
    ASSERT_EQ(report.instances.size(), 1u);
    EXPECT_TRUE(report.instances[0].passed) << report.instances[0].detail;
    EXPECT_TRUE(report.instances[0].sides.empty());
}

TEST(VerifyRelations, SampledPb4IsDeterministic) {
    VerifyOptions options;
    options.sample = 1;
    options.seed = 7;
    const auto a = verify_relations(4, RelationFamily::pb_all, options);
    const auto b = verify_relations(4, RelationFamily::pb_all, options);
    ASSERT_EQ(a.instances.size(), b.instances.size());
    EXPECT_EQ(a.instances.size(), 3u);
    for (std::size_t k = 0; k < a.instances.size(); ++k) EXPECT_EQ(a.instances[k].name, b.instances[k].name);
    EXPECT_TRUE(a.all_passed());
}

}  // namespace
}  // namespace flipbraid
