#pragma once

// U^+ as the free algebra on E_1..E_n modulo the quantum Serre ideal,
// normalized one weight component at a time.

#include "qborel/rootsys.hpp"
#include "qborel/terms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace qborel {

/// A word in the generators; each char is a 0-based simple index.
using Letters = std::string;

/// Element of the free algebra (arbitrary words). Elements of U^+ reuse the
/// same type with keys restricted to the standard words of an NFContext.
using FreeElt = Terms<Letters>;

Letters letters_of(std::initializer_list<int> idx);
QVec weight_of(const RootSystem& rs, const Letters& w);
FreeElt free_generator(int i);
FreeElt free_mul(const FreeElt& a, const FreeElt& b);

/// sum_s (-1)^s [1-a_ij choose s]_{q_i} E_i^{1-a_ij-s} E_j E_i^s; throws
/// InvalidPair for i == j.
FreeElt serre_relation(const RootSystem& rs, int i, int j);

/// Normal forms in U^+. The component of weight mu is realized as the
/// quotient of (+)_i E_i U^+_{mu-alpha_i} by the images of Serre * (basis
/// word); its basis is the set of non-pivot words E_i b (pivot = largest
/// word). Components are built on first use and cached; the context is
/// logically immutable and safe to share between threads.
class NFContext {
public:
    /// height_bound <= 0 selects 2 * ht(highest root).
    explicit NFContext(RootSystem rs, int height_bound = 0);
    NFContext(const NFContext&) = delete;
    NFContext& operator=(const NFContext&) = delete;
    ~NFContext();

    const RootSystem& roots() const { return rs_; }
    int height_bound() const { return bound_; }

    /// Standard words spanning U^+_mu, ascending. Empty for mu outside Q_+.
    const std::vector<Letters>& basis(const QVec& mu) const;
    int dim(const QVec& mu) const { return static_cast<int>(basis(mu).size()); }
    /// Coordinates of a word over basis(weight_of(word)).
    const std::vector<QRat>& word_coords(const Letters& w) const;
    /// Dimension of the free component (number of words of weight mu).
    long free_dim(const QVec& mu) const;

    /// Reduces an arbitrary free element to standard words.
    FreeElt reduce(const FreeElt& x) const;
    /// Product in U^+ of two reduced elements.
    FreeElt mul(const FreeElt& a, const FreeElt& b) const;

private:
    struct Component;
    const Component& component(const QVec& mu) const;
    std::unique_ptr<Component> build(const QVec& mu) const;

    RootSystem rs_;
    int bound_;
    mutable std::recursive_mutex mu_;
    mutable std::map<QVec, std::unique_ptr<Component>> comps_;
    mutable std::map<Letters, std::vector<QRat>> word_cache_;
};

/// nf_plus as a coordinate map: weight -> coordinates over basis(weight).
std::map<QVec, std::vector<QRat>> nf_plus(const NFContext& ctx, const FreeElt& x);

} // namespace qborel
