#pragma once

// T^w, the elements w_Theta, the bijection kappa^w onto W^w, character
// strata and the (w, phi, L) classification table.

#include "qborel/pbw.hpp"
#include "qborel/weyl.hpp"

#include <string>
#include <vector>

namespace qborel {

struct ThetaSet {
    Word word;
    IndexSet indices;        // 0-based positions into roots_of_word(word)
    std::vector<QVec> roots; // beta_k for k in indices
    friend bool operator==(const ThetaSet&, const ThetaSet&) = default;
};

struct Stratum {
    WeylElt y; // w_Theta
    ThetaSet theta;
    int dim = 0;
};

struct CharacterData {
    Stratum stratum;
    std::vector<QRat> f; // aligned with stratum.theta.roots
    /// phi(E_{beta_k}) for every root position k.
    std::vector<QRat> values(int t) const;
};

struct CoidealTriple {
    WeylElt w;
    Word word;
    CharacterData chr;
    Lattice L;
};

/// (prod_{beta in roots} s_beta) w; throws NotOrthogonal.
WeylElt w_theta(const RootSystem& rs, const WeylElt& w, const std::vector<QVec>& roots);

/// Theta sets ordered by size, then by index list. Throws NotReduced when
/// word is not a reduced word of w.
std::vector<ThetaSet> enumerate_Tw(const RootSystem& rs, const WeylElt& w, const Word& word);
bool in_Tw(const RootSystem& rs, const WeylElt& w, const std::vector<QVec>& roots);

WeylElt kappa(const RootSystem& rs, const WeylElt& w, const ThetaSet& theta);
/// throws NotInWw
ThetaSet kappa_inverse(const RootSystem& rs, const WeylElt& w, const Word& word, const WeylElt& y);

std::vector<Stratum> enumerate_strata(const RootSystem& rs, const WeylElt& w, const Word& word);

/// Generators of supp phi as an N_0-monoid.
std::vector<QVec> support_of(const CharacterData& chr);
/// (supp phi)^perp
Lattice max_admissible_lattice(const RootSystem& rs, const CharacterData& chr);
bool validate_triple(const RootSystem& rs, const CoidealTriple& t);

struct ReportRow {
    Word y_word;
    IndexSet theta_indices;
    std::vector<QVec> theta_roots;
    int dim = 0;
    std::vector<QVec> lmax_basis;
};

struct ClassificationReport {
    std::string type;
    Word word;
    std::vector<ReportRow> rows;
    /// (a, b) with a != b and y_a < y_b in Bruhat order, as row indices.
    std::vector<std::pair<int, int>> bruhat;
    int tw_count = 0;
    int ww_count = 0;
};

ClassificationReport classify(const RootSystem& rs, const WeylElt& w, const Word& word);

} // namespace qborel
