#pragma once

// Lusztig root vectors along a reduced word, PBW coordinates in U^+[w],
// Levendorskii-Soibelman relations, characters and the polynomial H-prime
// test. Root positions are 0-based here; external formats use 1-based.

#include "qborel/echelon.hpp"
#include "qborel/uelt.hpp"
#include "qborel/weyl.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qborel {

/// Exponent vector (a_1, ..., a_t) of E_{beta_t}^{a_t} ... E_{beta_1}^{a_1}.
using Exponents = std::vector<int>;

struct PBWVec {
    Word word;
    Terms<Exponents> terms;
    bool is_zero() const { return terms.is_zero(); }
    friend bool operator==(const PBWVec&, const PBWVec&) = default;
};

/// E_{beta_i} = T_{a_1} ... T_{a_{i-1}} E_{a_i} as reduced U^+ elements.
std::vector<FreeElt> root_vectors(const UAlgebra& alg, const Word& word);

/// PBW data for one reduced word. Per-weight solvers and LS relations are
/// cached; the object is logically immutable.
class PbwBasis {
public:
    PbwBasis(const UAlgebra& alg, Word word); // throws NotReduced
    PbwBasis(const PbwBasis&) = delete;
    PbwBasis& operator=(const PbwBasis&) = delete;

    const UAlgebra& algebra() const { return alg_; }
    const RootSystem& roots_system() const { return alg_.roots(); }
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<QVec>& roots() const { return roots_; }
    const std::vector<FreeElt>& root_vectors() const { return vectors_; }

    /// All exponent vectors of total weight mu, ascending.
    std::vector<Exponents> monomials_of_weight(const QVec& mu) const;
    /// The ordered monomial E_{beta_t}^{a_t} ... E_{beta_1}^{a_1}.
    const FreeElt& monomial(const Exponents& a) const;
    /// Multiplies a PBW vector out in U^+.
    FreeElt evaluate(const PBWVec& v) const;
    /// Unique PBW coordinates; throws NotInSubalgebra.
    PBWVec expand(const FreeElt& x) const;
    PBWVec unit(int k) const; // E_{beta_k}
    /// Expansion of E_{beta_i} E_{beta_j} - q^{(beta_i,beta_j)} E_{beta_j} E_{beta_i}, i < j.
    const PBWVec& ls_relation(int i, int j) const; // throws BadIndex

private:
    struct Solver {
        std::vector<Exponents> monomials;
        RowEchelon<QRat> ech{0, true};
    };
    const Solver& solver(const QVec& mu) const;

    const UAlgebra& alg_;
    Word word_;
    std::vector<QVec> roots_;
    std::vector<FreeElt> vectors_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Exponents, FreeElt> mono_cache_;
    mutable std::map<QVec, Solver> solvers_;
    mutable std::map<std::pair<int, int>, PBWVec> ls_cache_;
};

/// Subset of root positions as a sorted index list.
using IndexSet = std::vector<int>;

/// sum_a c_a prod_k values[k]^{a_k}; values has one entry per root position
/// (zero outside the support of the character).
QRat char_eval(const std::vector<QRat>& values, const PBWVec& x);

/// Concrete test: phi(E_{beta_k}) = f[k] for k in theta, 0 otherwise,
/// annihilates every LS relation.
bool char_well_defined(const PbwBasis& pbw, const IndexSet& theta, const std::vector<QRat>& f);
/// Generic test with independent nonzero indeterminates f_k (k in theta):
/// every LS equation holds identically as a polynomial in the f_k.
bool char_well_defined_generic(const PbwBasis& pbw, const IndexSet& theta);

/// Every PBW term has a factor E_{beta_k} with k outside theta.
bool is_in_P_Theta(const IndexSet& theta, const PBWVec& x);

/// U^+[w] / P_S is a commutative polynomial ring on {E_{beta_k} : k in S}:
/// no LS relation leaves a term supported on S alone, and (beta_i,beta_j)=0
/// for i, j in S.
bool quotient_is_commutative_polynomial(const PbwBasis& pbw, const IndexSet& theta);

/// All S passing quotient_is_commutative_polynomial with no E_{beta_k},
/// k in S, inside P_S; ordered by size, then lexicographically.
std::vector<IndexSet> enumerate_polynomial_ideals(const PbwBasis& pbw);

} // namespace qborel
