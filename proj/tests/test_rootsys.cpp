#include "qborel/errors.hpp"
#include "qborel/rootsys.hpp"

#include <gtest/gtest.h>

using namespace qborel;

TEST(RootSystem, PositiveRootCounts) {
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4}, {"B3", 9}, {"C3", 9},
        {"D4", 12}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"A1xA1", 2}, {"A2xB2", 7}};
    for (const auto& [type, n] : cases) EXPECT_EQ(RootSystem::from_type(type).positive_roots().size(), n) << type;
}

TEST(RootSystem, HighestRootHeights) {
    EXPECT_EQ(RootSystem::from_type("A3").highest_root_height(), 3);
    EXPECT_EQ(RootSystem::from_type("B3").highest_root_height(), 5);
    EXPECT_EQ(RootSystem::from_type("G2").highest_root_height(), 5);
    EXPECT_EQ(RootSystem::from_type("E6").highest_root_height(), 11);
}

TEST(RootSystem, Conventions) {
    const auto b2 = RootSystem::from_type("B2");
    // alpha_1 short
    EXPECT_LT(b2.bilinear(b2.simple_root(0), b2.simple_root(0)), b2.bilinear(b2.simple_root(1), b2.simple_root(1)));
    const auto g2 = RootSystem::from_type("G2");
    EXPECT_EQ(g2.cartan(), (IntMatrix{{2, -3}, {-1, 2}}));
    EXPECT_EQ(g2.positive_roots().back(), (QVec{3, 2}));
    EXPECT_EQ(b2.positive_roots().back(), (QVec{2, 1}));
}

TEST(RootSystem, FormIsSymmetricAndReflectionInvariant) {
    for (const char* type : {"A3", "B3", "C3", "G2", "F4"}) {
        const auto rs = RootSystem::from_type(type);
        const auto& roots = rs.positive_roots();
        for (const auto& a : roots)
            for (const auto& b : roots) {
                ASSERT_EQ(rs.bilinear(a, b), rs.bilinear(b, a));
                for (int i = 0; i < rs.rank(); ++i)
                    ASSERT_EQ(rs.bilinear(rs.simple_reflect(i, a), rs.simple_reflect(i, b)), rs.bilinear(a, b));
            }
    }
}

TEST(RootSystem, RootStringsClosed) {
    const auto rs = RootSystem::from_type("F4");
    for (const auto& b : rs.positive_roots())
        for (int i = 0; i < rs.rank(); ++i) {
            const QVec r = rs.simple_reflect(i, b);
            EXPECT_TRUE(rs.is_root(r));
        }
}

TEST(RootSystem, FromCartanMatchesType) {
    const auto a = RootSystem::from_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    EXPECT_EQ(a.positive_roots(), RootSystem::from_type("B3").positive_roots());
}

TEST(RootSystem, InvalidCartanRejected) {
    EXPECT_THROW(RootSystem::from_type("Z9"), InvalidCartan);
    EXPECT_THROW(RootSystem::from_cartan({{2, -1}, {0, 2}}), InvalidCartan);
    EXPECT_THROW(RootSystem::from_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), InvalidCartan); // affine
    EXPECT_THROW(RootSystem::from_cartan({{2, -2}, {-2, 2}}), InvalidCartan);
}

TEST(RootSystem, HeightRequiresPositiveCone) {
    const auto rs = RootSystem::from_type("A2");
    EXPECT_EQ(rs.height({1, 1}), 2);
    EXPECT_THROW(rs.height({1, -1}), NotInPositiveCone);
}

TEST(RootSystem, RhoPairsToOneWithSimpleCoroots) {
    for (const char* type : {"A3", "B3", "G2", "C3"}) {
        const auto rs = RootSystem::from_type(type);
        const auto rho = rs.rho();
        for (int i = 0; i < rs.rank(); ++i) {
            const QVec a = rs.simple_root(i);
            EXPECT_EQ(2 * rs.bilinear(a, rho) / rs.bilinear(a, a), Rat(1)) << type;
            const auto om = rs.fundamental_weight(i);
            for (int j = 0; j < rs.rank(); ++j) {
                const QVec b = rs.simple_root(j);
                EXPECT_EQ(2 * rs.bilinear(b, om) / rs.bilinear(b, b), Rat(i == j ? 1 : 0));
            }
        }
    }
}

TEST(Lattice, HermiteNormalForm) {
    const auto h = hermite_normal_form({{2, 4}, {3, 6}, {0, 4}}, 2);
    EXPECT_EQ(h, (std::vector<QVec>{{1, 2}, {0, 4}}));
    const auto l = Lattice::from_generators(2, {{2, 4}, {3, 6}});
    EXPECT_TRUE(l.contains({5, 10}));
    EXPECT_FALSE(l.contains({1, 3}));
    EXPECT_EQ(l, Lattice::from_generators(2, {{1, 2}}));
    EXPECT_TRUE(lattice_leq(l, Lattice::full(2)));
    EXPECT_FALSE(lattice_leq(Lattice::full(2), l));
}

TEST(Lattice, OrthogonalComplement) {
    const auto rs = RootSystem::from_type("A2");
    const auto l = orthogonal_complement_lattice(rs, {{1, 0}});
    EXPECT_EQ(l, Lattice::from_generators(2, {{1, 2}}));
    EXPECT_EQ(orthogonal_complement_lattice(rs, {}), Lattice::full(2));
    EXPECT_EQ(orthogonal_complement_lattice(rs, {{1, 0}, {0, 1}}).rank(), 0);
    const auto b2 = RootSystem::from_type("B2");
    const Lattice perp = orthogonal_complement_lattice(b2, {{1, 1}});
    for (const auto& g : perp.basis()) EXPECT_EQ(b2.bilinear(g, QVec{1, 1}), 0);
}

TEST(Kostant, SmallValues) {
    const auto a2 = RootSystem::from_type("A2");
    EXPECT_EQ(kostant_partition_count(a2, {1, 1}), 2);
    EXPECT_EQ(kostant_partition_count(a2, {2, 2}), 3);
    EXPECT_EQ(kostant_partition_count(a2, {0, 0}), 1);
    const auto b2 = RootSystem::from_type("B2");
    EXPECT_EQ(kostant_partition_count(b2, {2, 1}), 3);
    EXPECT_EQ(kostant_partition_count(b2, {1, -1}), 0);
}
