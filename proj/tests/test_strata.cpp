#include "oracles.hpp"

#include "qborel/errors.hpp"
#include "qborel/strata.hpp"

#include <gtest/gtest.h>

using namespace qborel;

namespace {

oracle::Mat as_mat(const RootSystem& rs, const WeylElt& w) {
    oracle::Mat m;
    for (int j = 0; j < rs.rank(); ++j) m.push_back(w.apply(rs.simple_root(j)));
    return m;
}

} // namespace

TEST(Tw, MatchesBruteForceOnEveryReducedWord) {
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        const auto rs = RootSystem::from_type(type);
        for (const auto& w : enumerate_group(rs))
            for (const auto& word : all_reduced_words(rs, w)) {
                std::set<IndexSet> got;
                for (const auto& th : enumerate_Tw(rs, w, word)) got.insert(th.indices);
                ASSERT_EQ(got, oracle::tw_bruteforce(rs, word)) << type;
            }
    }
}

TEST(Tw, WordMustPresentTheElement) {
    const auto rs = RootSystem::from_type("A2");
    const auto w0 = longest_element(rs);
    EXPECT_THROW(enumerate_Tw(rs, w0, {0, 1}), NotReduced);
    EXPECT_THROW(enumerate_Tw(rs, w0, {0, 0, 1}), NotReduced);
}

TEST(Strata, A2LongestElement) {
    const auto rs = RootSystem::from_type("A2");
    const auto w0 = longest_element(rs);
    const auto strata = enumerate_strata(rs, w0, {0, 1, 0});
    ASSERT_EQ(strata.size(), 3u);
    std::multiset<int> dims;
    std::set<WeylElt> ys;
    for (const auto& s : strata) {
        dims.insert(s.dim);
        ys.insert(s.y);
    }
    EXPECT_EQ(dims, (std::multiset<int>{0, 1, 1}));
    const std::set<WeylElt> expect{w0, WeylElt::from_word(rs, {1, 0}), WeylElt::from_word(rs, {0, 1})};
    EXPECT_EQ(ys, expect);
}

TEST(Strata, KappaIsOrderReversingAgainstBruhatOracle) {
    for (const char* type : {"B2", "G2", "A3"}) {
        const auto rs = RootSystem::from_type(type);
        const oracle::Bruhat br(rs);
        for (const auto& w : enumerate_group(rs)) {
            const Word word = reduced_word(rs, w);
            const auto tw = enumerate_Tw(rs, w, word);
            for (const auto& a : tw)
                for (const auto& b : tw) {
                    const bool sub = std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end());
                    const bool le = br.le(as_mat(rs, kappa(rs, w, b)), as_mat(rs, kappa(rs, w, a)));
                    if (sub) EXPECT_TRUE(le);
                }
        }
    }
}

TEST(Strata, KappaInverse) {
    const auto rs = RootSystem::from_type("B2");
    const auto w0 = longest_element(rs);
    const Word word = reduced_word(rs, w0);
    for (const auto& th : enumerate_Tw(rs, w0, word)) EXPECT_EQ(kappa_inverse(rs, w0, word, kappa(rs, w0, th)), th);
    EXPECT_THROW(kappa_inverse(rs, w0, word, WeylElt::identity(rs)), NotInWw);
}

TEST(Strata, WThetaRequiresOrthogonality) {
    const auto rs = RootSystem::from_type("A2");
    const auto w0 = longest_element(rs);
    EXPECT_THROW(w_theta(rs, w0, {{1, 0}, {0, 1}}), NotOrthogonal);
    EXPECT_EQ(w_theta(rs, w0, {}), w0);
    EXPECT_TRUE(in_Tw(rs, w0, {{1, 0}}));
    EXPECT_FALSE(in_Tw(rs, w0, {{1, 0}, {0, 1}}));
}

TEST(Strata, SupportAndMaximalLattice) {
    const auto rs = RootSystem::from_type("A2");
    const auto w0 = longest_element(rs);
    for (const auto& s : enumerate_strata(rs, w0, {0, 1, 0})) {
        CharacterData chr{s, std::vector<QRat>(s.theta.roots.size(), QRat(1))};
        EXPECT_EQ(support_of(chr), s.theta.roots);
        const Lattice l = max_admissible_lattice(rs, chr);
        for (const auto& g : l.basis())
            for (const auto& b : s.theta.roots) EXPECT_EQ(rs.bilinear(g, b), 0);
        EXPECT_EQ(l.rank(), rs.rank() - static_cast<int>(s.theta.roots.size()));
        EXPECT_TRUE(validate_triple(rs, {w0, {0, 1, 0}, chr, l}));
        if (!s.theta.roots.empty()) EXPECT_FALSE(validate_triple(rs, {w0, {0, 1, 0}, chr, Lattice::full(2)}));
    }
}

TEST(Classify, A2TableAndBruhatPairs) {
    const auto rs = RootSystem::from_type("A2");
    const auto rep = classify(rs, longest_element(rs), {0, 1, 0});
    EXPECT_EQ(rep.tw_count, 3);
    EXPECT_EQ(rep.ww_count, 3);
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_EQ(rep.rows[0].dim, 0);
    EXPECT_EQ(rep.rows[0].lmax_basis.size(), 2u);
    EXPECT_EQ(rep.bruhat.size(), 2u);
}

TEST(Classify, A1) {
    const auto rs = RootSystem::from_type("A1");
    const auto rep = classify(rs, WeylElt::simple(rs, 0), {0});
    EXPECT_EQ(rep.rows.size(), 2u);
}

TEST(Classify, RankTwoThetaUsesEndpoints) {
    for (const char* type : {"A2", "B2", "G2"}) {
        const auto rs = RootSystem::from_type(type);
        for (const auto& w : enumerate_group(rs))
            for (const auto& word : all_reduced_words(rs, w))
                for (const auto& th : enumerate_Tw(rs, w, word))
                    for (int k : th.indices) EXPECT_TRUE(k == 0 || k == static_cast<int>(word.size()) - 1);
    }
}
