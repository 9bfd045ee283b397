#pragma once

// The full quantized enveloping algebra U in triangular normal form
// F-word * K_mu * E-word, and the Lusztig symmetries T_alpha.

#include "qborel/uplus.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qborel {

/// Basis monomial F_f K_k E_e; f and e are standard words of the context.
struct UKey {
    Letters f;
    QVec k;
    Letters e;
    friend auto operator<=>(const UKey&, const UKey&) = default;
    friend bool operator==(const UKey&, const UKey&) = default;
};

using UElt = Terms<UKey>;

/// One generator of an unnormalized product: E_i, F_i or K_mu.
struct Gen {
    enum class Kind { E, F, K } kind;
    int index = 0;
    QVec kexp;
    static Gen E(int i) { return {Kind::E, i, {}}; }
    static Gen F(int i) { return {Kind::F, i, {}}; }
    static Gen K(QVec mu) { return {Kind::K, 0, std::move(mu)}; }
};

/// Multiplication, straightening and symmetries for one root system. Holds
/// the U^+ normal-form context (F-words satisfy the same Serre relations and
/// are reduced by the same context). Caches are internal and guarded.
class UAlgebra {
public:
    explicit UAlgebra(RootSystem rs, int height_bound = 0);
    UAlgebra(const UAlgebra&) = delete;
    UAlgebra& operator=(const UAlgebra&) = delete;

    const RootSystem& roots() const { return nf_.roots(); }
    const NFContext& nf() const { return nf_; }
    int rank() const { return roots().rank(); }

    UElt one() const;
    UElt E(int i) const;
    UElt F(int i) const;
    UElt K(const QVec& mu) const;
    /// E_i^n / [n]_{q_i}!
    UElt divided_E(int i, int n) const;
    UElt divided_F(int i, int n) const;

    /// Embeds a reduced U^+ element (E-words) or U^- element (F-words).
    UElt from_uplus(const FreeElt& x) const;
    UElt from_uminus(const FreeElt& x) const;
    /// Inverse of from_uplus; throws NotInSubalgebra if an F or K part occurs.
    FreeElt to_uplus(const UElt& x) const;
    bool in_uplus(const UElt& x) const;
    bool in_uge(const UElt& x) const; // no F part

    UElt mul(const UElt& a, const UElt& b) const;
    UElt pow(const UElt& x, int n) const;
    /// Normal form of a product of generators.
    UElt normal_form(const std::vector<Gen>& word) const;

    UElt lusztig_T(int a, const UElt& x) const;
    UElt lusztig_T_inv(int a, const UElt& x) const;

private:
    UElt term_mul(const UKey& a, const UKey& b) const;
    const UElt& straighten(const Letters& e, const Letters& f) const;
    UElt right_mul_E(const UElt& x, int a) const;
    UElt generator_image(int a, bool inverse, Gen::Kind kind, int b) const;
    const UElt& word_image(int a, bool inverse, Gen::Kind kind, const Letters& w) const;
    UElt apply_symmetry(int a, bool inverse, const UElt& x) const;

    NFContext nf_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<Letters, Letters>, UElt> straighten_cache_;
    mutable std::map<std::tuple<int, bool, int, Letters>, UElt> image_cache_;
};

/// u_normal_form from the spec operation list.
inline UElt u_normal_form(const UAlgebra& alg, const std::vector<Gen>& word) { return alg.normal_form(word); }

/// Weight of the E-part minus the weight of the F-part of a monomial.
QVec key_weight(const RootSystem& rs, const UKey& k);

} // namespace qborel
