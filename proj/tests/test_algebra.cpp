#include "oracles.hpp"

#include "qborel/errors.hpp"
#include "qborel/uelt.hpp"
#include "qborel/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qborel;

namespace {

QRat qp(int k) { return QRat::q_power(k); }

FreeElt word(std::initializer_list<int> w) { return FreeElt(letters_of(w), QRat(1)); }

} // namespace

TEST(UPlus, SerreRelationsVanish) {
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        const auto rs = RootSystem::from_type(type);
        NFContext ctx(rs);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                if (i != j) EXPECT_TRUE(ctx.reduce(serre_relation(rs, i, j)).is_zero()) << type;
        EXPECT_THROW(serre_relation(rs, 0, 0), InvalidPair);
    }
}

TEST(UPlus, A2SerreRelationExplicit) {
    const auto rs = RootSystem::from_type("A2");
    const FreeElt s = serre_relation(rs, 0, 1);
    FreeElt expect = word({0, 0, 1}) - word({0, 1, 0}).scaled(qp(1) + qp(-1)) + word({1, 0, 0});
    EXPECT_EQ(s, expect);
}

TEST(UPlus, DimensionsMatchFreeModuloSerreOverGFp) {
    std::mt19937_64 rng(99);
    for (const char* type : {"A2", "B2", "G2", "A3", "B3"}) {
        const auto rs = RootSystem::from_type(type);
        NFContext ctx(rs);
        const int bound = std::string(type) == "B3" ? 6 : ctx.height_bound();
        const std::uint64_t q = 2 + rng() % (oracle::P - 3);
        for (const auto& mu : weights_up_to(rs, bound)) {
            EXPECT_EQ(ctx.dim(mu), oracle::free_mod_serre_dim(rs, mu, q)) << type << " " << to_string(mu);
            EXPECT_EQ(ctx.dim(mu), kostant_partition_count(rs, mu)) << type << " " << to_string(mu);
        }
    }
}

TEST(UPlus, HeightOverflow) {
    const auto rs = RootSystem::from_type("A2");
    NFContext ctx(rs, 3);
    EXPECT_EQ(ctx.height_bound(), 3);
    EXPECT_THROW(ctx.basis({2, 2}), HeightOverflow);
}

TEST(UPlus, MultiplicationAssociative) {
    const auto rs = RootSystem::from_type("B2");
    NFContext ctx(rs);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> letter(0, 1), len(1, 2), c(-3, 3);
    auto rnd = [&] {
        FreeElt x;
        for (int t = 0; t < 2; ++t) {
            Letters w;
            for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(letter(rng)));
            x.add(w, QRat(c(rng)) * qp(c(rng)));
        }
        return ctx.reduce(x);
    };
    for (int n = 0; n < 30; ++n) {
        const FreeElt a = rnd(), b = rnd(), d = rnd();
        ASSERT_EQ(ctx.mul(ctx.mul(a, b), d), ctx.mul(a, ctx.mul(b, d)));
        ASSERT_EQ(ctx.mul(a, b), ctx.reduce(free_mul(a, b)));
    }
}

TEST(UAlgebra, CommutationRelations) {
    for (const char* type : {"A2", "B2", "G2"}) {
        const auto rs = RootSystem::from_type(type);
        UAlgebra alg(rs);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                UElt c = alg.mul(alg.E(i), alg.F(j)) - alg.mul(alg.F(j), alg.E(i));
                if (i == j) {
                    const int d = rs.symmetrizer(i);
                    c -= (alg.K(rs.simple_root(i)) - alg.K(-rs.simple_root(i))).scaled(QRat(1) / (qp(d) - qp(-d)));
                }
                EXPECT_TRUE(c.is_zero()) << type;
                const long p = rs.bilinear(rs.simple_root(i), rs.simple_root(j));
                const UElt k = alg.K(rs.simple_root(i)), kinv = alg.K(-rs.simple_root(i));
                EXPECT_EQ(alg.mul(alg.mul(k, alg.E(j)), kinv), alg.E(j).scaled(qp(static_cast<int>(p))));
                EXPECT_EQ(alg.mul(alg.mul(k, alg.F(j)), kinv), alg.F(j).scaled(qp(static_cast<int>(-p))));
            }
    }
}

TEST(UAlgebra, NormalFormOfGeneratorWords) {
    const auto rs = RootSystem::from_type("A2");
    UAlgebra alg(rs);
    const UElt x = alg.normal_form({Gen::E(0), Gen::K({1, 0}), Gen::F(0)});
    UElt y = alg.mul(alg.mul(alg.E(0), alg.K({1, 0})), alg.F(0));
    EXPECT_EQ(x, y);
    EXPECT_EQ(alg.mul(alg.K({1, 0}), alg.K({-1, 0})), alg.one());
}

TEST(UAlgebra, DividedPowers) {
    const auto rs = RootSystem::from_type("B2");
    UAlgebra alg(rs);
    EXPECT_EQ(alg.divided_E(1, 2).scaled(q_factorial(2, 2)), alg.pow(alg.E(1), 2));
    EXPECT_EQ(alg.divided_F(0, 3).scaled(q_factorial(3, 1)), alg.pow(alg.F(0), 3));
}

TEST(Lusztig, A2RootVector) {
    const auto rs = RootSystem::from_type("A2");
    UAlgebra alg(rs);
    const UElt t = alg.lusztig_T(0, alg.E(1));
    const UElt expect = alg.mul(alg.E(0), alg.E(1)) - alg.mul(alg.E(1), alg.E(0)).scaled(qp(-1));
    EXPECT_EQ(t, expect);
    EXPECT_EQ(alg.lusztig_T(0, alg.E(0)), -alg.mul(alg.F(0), alg.K({1, 0})));
    EXPECT_EQ(alg.lusztig_T(0, alg.F(0)), -alg.mul(alg.K({-1, 0}), alg.E(0)));
    EXPECT_EQ(alg.lusztig_T(0, alg.K({0, 1})), alg.K({1, 1}));
}

TEST(Lusztig, BraidRelationOnGenerators) {
    // T_1 T_2 T_1 = T_2 T_1 T_2 in A2; T_1 T_2 T_1 T_2 = T_2 T_1 T_2 T_1 in B2
    for (const auto& [type, m] : std::vector<std::pair<std::string, int>>{{"A2", 3}, {"B2", 4}}) {
        const auto rs = RootSystem::from_type(type);
        UAlgebra alg(rs);
        for (const auto& g : {alg.E(0), alg.E(1), alg.F(0), alg.F(1)}) {
            UElt a = g, b = g;
            for (int k = m - 1; k >= 0; --k) {
                a = alg.lusztig_T(k % 2, a);
                b = alg.lusztig_T(1 - k % 2, b);
            }
            EXPECT_EQ(a, b) << type;
        }
    }
}

TEST(Lusztig, SuiteOnRank2) {
    for (const char* type : {"A2", "B2", "G2"}) {
        for (const auto& r : run_suite("kernel", RootSystem::from_type(type)))
            EXPECT_TRUE(r.pass) << type << " " << r.name << ": " << r.detail;
    }
}
