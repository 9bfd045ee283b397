#include "oracles.hpp"

#include "qborel/errors.hpp"
#include "qborel/weyl.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qborel;

namespace {

oracle::Mat as_mat(const RootSystem& rs, const WeylElt& w) {
    oracle::Mat m;
    for (int j = 0; j < rs.rank(); ++j) m.push_back(w.apply(rs.simple_root(j)));
    return m;
}

} // namespace

TEST(Weyl, GroupOrders) {
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"A1xA1", 4}};
    for (const auto& [type, n] : cases) EXPECT_EQ(enumerate_group(RootSystem::from_type(type)).size(), n) << type;
}

TEST(Weyl, LongestElement) {
    for (const char* type : {"A2", "B2", "G2", "A3", "B3", "D4"}) {
        const auto rs = RootSystem::from_type(type);
        const auto w0 = longest_element(rs);
        EXPECT_EQ(w0.length(), static_cast<int>(rs.positive_roots().size()));
        EXPECT_TRUE((w0 * w0).is_identity());
    }
}

TEST(Weyl, LengthsAgreeWithOracle) {
    for (const char* type : {"A3", "B3", "G2"}) {
        const auto rs = RootSystem::from_type(type);
        for (const auto& w : enumerate_group(rs)) {
            const Word word = reduced_word(rs, w);
            EXPECT_EQ(WeylElt::from_word(rs, word), w);
            EXPECT_EQ(static_cast<int>(word.size()), w.length());
            EXPECT_EQ(oracle::length(rs, oracle::from_word(rs, word)), w.length());
            EXPECT_EQ(as_mat(rs, w), oracle::from_word(rs, word));
        }
    }
}

TEST(Weyl, ReducedWordCounts) {
    EXPECT_EQ(all_reduced_words(RootSystem::from_type("A3"), longest_element(RootSystem::from_type("A3"))).size(), 16u);
    EXPECT_EQ(all_reduced_words(RootSystem::from_type("B2"), longest_element(RootSystem::from_type("B2"))).size(), 2u);
    EXPECT_EQ(all_reduced_words(RootSystem::from_type("G2"), longest_element(RootSystem::from_type("G2"))).size(), 2u);
    EXPECT_EQ(all_reduced_words(RootSystem::from_type("B3"), longest_element(RootSystem::from_type("B3"))).size(), 42u);
}

TEST(Weyl, ReducedWordsAndInversions) {
    const auto rs = RootSystem::from_type("A2");
    EXPECT_TRUE(is_reduced(rs, {0, 1, 0}));
    EXPECT_FALSE(is_reduced(rs, {0, 0}));
    EXPECT_THROW(roots_of_word(rs, {0, 0}), NotReduced);
    EXPECT_EQ(roots_of_word(rs, {0, 1, 0}), (std::vector<QVec>{{1, 0}, {1, 1}, {0, 1}}));
    for (const auto& w : enumerate_group(RootSystem::from_type("B3"))) {
        const auto rs3 = RootSystem::from_type("B3");
        auto a = roots_of_word(rs3, reduced_word(rs3, w));
        auto b = inversion_set(rs3, w);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        ASSERT_EQ(a, b);
    }
}

TEST(Weyl, RootsOfWordMatchOracle) {
    const auto rs = RootSystem::from_type("G2");
    for (const auto& w : enumerate_group(rs))
        for (const auto& word : all_reduced_words(rs, w)) EXPECT_EQ(roots_of_word(rs, word), oracle::roots_of_word(rs, word));
}

TEST(Weyl, DescentsMatchLengths) {
    const auto rs = RootSystem::from_type("B3");
    for (const auto& w : enumerate_group(rs))
        for (int i = 0; i < rs.rank(); ++i) {
            const auto s = WeylElt::simple(rs, i);
            EXPECT_EQ(is_left_descent(rs, w, i), (s * w).length() < w.length());
            EXPECT_EQ(is_right_descent(rs, w, i), (w * s).length() < w.length());
        }
}

TEST(Weyl, BruhatMatchesClosureOracle) {
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        const auto rs = RootSystem::from_type(type);
        const oracle::Bruhat br(rs);
        const auto elts = enumerate_group(rs);
        for (const auto& u : elts)
            for (const auto& v : elts) ASSERT_EQ(bruhat_le(rs, u, v), br.le(as_mat(rs, u), as_mat(rs, v))) << type;
    }
}

TEST(Weyl, BruhatEquivalenceExhaustiveRank2) {
    for (const char* type : {"A2", "B2", "G2"}) {
        const auto rs = RootSystem::from_type(type);
        for (const auto& u : enumerate_group(rs))
            for (const auto& b : rs.positive_roots()) EXPECT_TRUE(weyl_bruhat_equiv(rs, u, b).consistent());
    }
}

TEST(Weyl, Lemma12RejectsBadChains) {
    const auto rs = RootSystem::from_type("A3");
    const auto w0 = longest_element(rs);
    // alpha_1 and alpha_3 are orthogonal to each other, alpha_2 to neither
    EXPECT_NO_THROW(lemma12_step(rs, w0, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}));
    EXPECT_THROW(lemma12_step(rs, WeylElt::identity(rs), {0, 1, 0}, {1, 0, 0}, {0, 0, 1}), InvalidChain);
    EXPECT_THROW(lemma12_step(rs, w0, {0, 1, 0}, {1, 1, 0}, {0, 1, 1}), InvalidChain); // (beta,gamma) != 0
    EXPECT_THROW(lemma12_step(rs, w0, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}), InvalidChain);
}

TEST(Weyl, Lemma12Postconditions) {
    const auto rs = RootSystem::from_type("A3");
    const auto w0 = longest_element(rs);
    const auto r = lemma12_step(rs, w0, {0, 1, 0}, {1, 0, 0}, {0, 0, 1});
    WeylElt a = w0, b = w0;
    for (const QVec& v : {QVec{0, 0, 1}, QVec{1, 0, 0}, QVec{0, 1, 0}}) a = WeylElt::reflection(rs, v) * a;
    for (const QVec& v : {r[2], r[1], r[0]}) b = WeylElt::reflection(rs, v) * b;
    EXPECT_EQ(a, b);
    EXPECT_TRUE(is_descending_chain(rs, w0, {r[2], r[1], r[0]}));
    EXPECT_NE(rs.bilinear(r[1], r[2]), 0);
}

TEST(Weyl, NormalizeNeedsNonorthogonalPair) {
    const auto rs = RootSystem::from_type("A3");
    const auto w0 = longest_element(rs);
    EXPECT_THROW(normalize_reflection_sequence(rs, w0, {{1, 0, 0}, {0, 0, 1}}), NoNonorthogonalPair);
    EXPECT_THROW(normalize_reflection_sequence(rs, WeylElt::identity(rs), {{1, 0, 0}, {0, 1, 0}}), InvalidChain);
}

TEST(Weyl, NormalizeRandomChainsB3) {
    const auto rs = RootSystem::from_type("B3");
    std::mt19937 rng(3);
    const auto elts = enumerate_group(rs);
    int done = 0;
    while (done < 50) {
        const WeylElt w = elts[std::uniform_int_distribution<std::size_t>(0, elts.size() - 1)(rng)];
        std::vector<QVec> chain;
        WeylElt x = w;
        for (int k = 0; k < 4; ++k) {
            std::vector<QVec> down;
            for (const auto& b : rs.positive_roots())
                if ((WeylElt::reflection(rs, b) * x).length() == x.length() - 1) down.push_back(b);
            if (down.empty()) break;
            chain.push_back(down[std::uniform_int_distribution<std::size_t>(0, down.size() - 1)(rng)]);
            x = WeylElt::reflection(rs, chain.back()) * x;
        }
        bool some = false;
        for (std::size_t a = 0; a < chain.size(); ++a)
            for (std::size_t b = a + 1; b < chain.size(); ++b) some = some || rs.bilinear(chain[a], chain[b]) != 0;
        if (!some) continue;
        ++done;
        const auto out = normalize_reflection_sequence(rs, w, chain);
        WeylElt y = w;
        for (const auto& b : out) y = WeylElt::reflection(rs, b) * y;
        EXPECT_EQ(y, x);
        EXPECT_TRUE(is_descending_chain(rs, w, out));
        EXPECT_NE(rs.bilinear(out[0], out[1]), 0);
    }
}

TEST(Weyl, Lemma12ExhaustiveRank3) {
    for (const char* type : {"A3", "B3", "C3"}) {
        const auto rs = RootSystem::from_type(type);
        auto refl = [&](const QVec& b) { return WeylElt::reflection(rs, b); };
        int n = 0;
        for (const auto& w : enumerate_group(rs))
            for (const auto& g : rs.positive_roots())
                for (const auto& b : rs.positive_roots())
                    for (const auto& a : rs.positive_roots()) {
                        if (rs.bilinear(b, g) != 0 || (rs.bilinear(a, b) == 0 && rs.bilinear(a, g) == 0)) continue;
                        if (!is_descending_chain(rs, w, {g, b, a})) continue;
                        ++n;
                        const auto r = lemma12_step(rs, w, a, b, g);
                        ASSERT_EQ(refl(r[0]) * refl(r[1]) * refl(r[2]), refl(a) * refl(b) * refl(g));
                        ASSERT_TRUE(is_descending_chain(rs, w, {r[2], r[1], r[0]}));
                        ASSERT_NE(rs.bilinear(r[1], r[2]), 0);
                    }
        EXPECT_GT(n, 0) << type;
    }
}

// s_alpha beta can be negative when (alpha, beta) > 0; the rewrite must still exist
TEST(Weyl, Lemma12PositivePairing) {
    const auto rs = RootSystem::from_type("A3");
    const auto w = WeylElt::from_word(rs, {0, 1, 2, 1, 0});
    const QVec a{1, 1, 1}, b{1, 1, 0}, g{0, 1, 1};
    ASSERT_TRUE(is_descending_chain(rs, w, {g, b, a}));
    ASSERT_GT(rs.bilinear(a, b), 0);
    const auto r = lemma12_step(rs, w, a, b, g);
    EXPECT_TRUE(is_descending_chain(rs, w, {r[2], r[1], r[0]}));
    EXPECT_NE(rs.bilinear(r[1], r[2]), 0);
}
