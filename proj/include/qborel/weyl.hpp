#pragma once

// Weyl group elements, reduced words, inversion sets, Bruhat order and the
// reflection-sequence manipulations used to compare Bruhat chains.

#include "qborel/rootsys.hpp"

#include <array>
#include <tuple>
#include <vector>

namespace qborel {

/// Sequence of 0-based simple-root indices (alpha_{a_1}, ..., alpha_{a_t}),
/// meaning the product s_{a_1} s_{a_2} ... s_{a_t}.
using Word = std::vector<int>;

/// Element of W, stored as its action on Q in the simple-root basis
/// (column j is the image of alpha_j). Equality is matrix equality. Elements
/// share the positive-root table of the root system they came from, which
/// keeps length() and products self-contained.
class WeylElt {
public:
    WeylElt() = default;
    static WeylElt identity(const RootSystem& rs);
    static WeylElt simple(const RootSystem& rs, int i);
    static WeylElt from_word(const RootSystem& rs, const Word& word);
    /// s_beta for a positive root beta.
    static WeylElt reflection(const RootSystem& rs, const QVec& beta);

    int rank() const { return rank_; }
    int length() const { return length_; }
    QVec apply(const QVec& x) const;
    std::vector<Rat> apply(const std::vector<Rat>& x) const;
    WeylElt inverse() const;
    bool is_identity() const;

    friend WeylElt operator*(const WeylElt& a, const WeylElt& b);
    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.action_ == b.action_; }
    friend auto operator<=>(const WeylElt& a, const WeylElt& b) { return a.action_ <=> b.action_; }

private:
    WeylElt(int rank, std::vector<int> action, std::shared_ptr<const std::vector<QVec>> roots);
    int entry(int i, int j) const { return action_[static_cast<std::size_t>(i * rank_ + j)]; }

    int rank_ = 0;
    std::vector<int> action_; // row-major
    std::shared_ptr<const std::vector<QVec>> roots_;
    int length_ = 0;
};

/// Lexicographically smallest reduced word (greedy on left descents).
Word reduced_word(const RootSystem& rs, const WeylElt& w);
std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElt& w);
bool is_reduced(const RootSystem& rs, const Word& word);

/// Left descent test: l(s_i w) < l(w), i.e. w^{-1} alpha_i < 0.
bool is_left_descent(const RootSystem& rs, const WeylElt& w, int i);
/// Right descent test: l(w s_i) < l(w), i.e. w alpha_i < 0.
bool is_right_descent(const RootSystem& rs, const WeylElt& w, int i);

/// (beta_1, ..., beta_t) with beta_i = s_{a_1} ... s_{a_{i-1}} alpha_{a_i};
/// throws NotReduced.
std::vector<QVec> roots_of_word(const RootSystem& rs, const Word& word);
/// Positive roots beta with w^{-1} beta < 0, in root-table order.
std::vector<QVec> inversion_set(const RootSystem& rs, const WeylElt& w);

bool bruhat_le(const RootSystem& rs, const WeylElt& u, const WeylElt& v);

/// All elements of W, sorted by length and then by action matrix.
std::vector<WeylElt> enumerate_group(const RootSystem& rs);
WeylElt longest_element(const RootSystem& rs);

/// (beta, u rho) as an exact rational.
Rat pair_with_rho(const RootSystem& rs, const QVec& beta, const WeylElt& u);
Rat pair_with_weight(const RootSystem& rs, const QVec& beta, const WeylElt& u, const std::vector<Rat>& lambda);

struct BruhatEquivalence {
    bool reflection_descends; // s_beta u < u
    bool inverse_negative;    // u^{-1} beta < 0
    bool rho_pairing_negative; // (beta, u rho) < 0
    bool consistent() const {
        return reflection_descends == inverse_negative && inverse_negative == rho_pairing_negative;
    }
};
BruhatEquivalence weyl_bruhat_equiv(const RootSystem& rs, const WeylElt& u, const QVec& beta);

/// Checks l(s_{b_i} ... s_{b_1} w) = l(w) - i for every prefix.
bool is_descending_chain(const RootSystem& rs, const WeylElt& w, const std::vector<QVec>& betas);

/// Given a descending chain s_alpha s_beta s_gamma w with (beta, gamma) = 0
/// and alpha non-orthogonal to beta or gamma, returns (alpha', beta', gamma')
/// with the same product, the same chain property and (beta', gamma') != 0.
std::array<QVec, 3> lemma12_step(const RootSystem& rs, const WeylElt& w, const QVec& alpha, const QVec& beta,
                                 const QVec& gamma);

/// Rewrites a descending chain (betas[0] applied first) that contains a
/// non-orthogonal pair into one with the same end point whose first two
/// reflections are non-orthogonal.
std::vector<QVec> normalize_reflection_sequence(const RootSystem& rs, const WeylElt& w, std::vector<QVec> betas);

} // namespace qborel
