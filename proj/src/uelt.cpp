#include "qborel/uelt.hpp"

#include "qborel/errors.hpp"

namespace qborel {

namespace {

QVec zero_vec(int n) { return QVec(static_cast<std::size_t>(n), 0); }

} // namespace

QVec key_weight(const RootSystem& rs, const UKey& k) { return weight_of(rs, k.e) - weight_of(rs, k.f); }

UAlgebra::UAlgebra(RootSystem rs, int height_bound) : nf_(std::move(rs), height_bound) {}

UElt UAlgebra::one() const { return UElt(UKey{"", zero_vec(rank()), ""}, QRat(1)); }

UElt UAlgebra::E(int i) const {
    if (i < 0 || i >= rank()) throw BadIndex("simple index out of range");
    return UElt(UKey{"", zero_vec(rank()), Letters(1, static_cast<char>(i))}, QRat(1));
}

UElt UAlgebra::F(int i) const {
    if (i < 0 || i >= rank()) throw BadIndex("simple index out of range");
    return UElt(UKey{Letters(1, static_cast<char>(i)), zero_vec(rank()), ""}, QRat(1));
}

UElt UAlgebra::K(const QVec& mu) const {
    if (static_cast<int>(mu.size()) != rank()) throw DimensionMismatch("K exponent has wrong length");
    return UElt(UKey{"", mu, ""}, QRat(1));
}

UElt UAlgebra::divided_E(int i, int n) const {
    return from_uplus(nf_.reduce(FreeElt(Letters(static_cast<std::size_t>(n), static_cast<char>(i)),
                                         QRat(1) / q_factorial(n, roots().symmetrizer(i)))));
}

UElt UAlgebra::divided_F(int i, int n) const {
    return from_uminus(nf_.reduce(FreeElt(Letters(static_cast<std::size_t>(n), static_cast<char>(i)),
                                          QRat(1) / q_factorial(n, roots().symmetrizer(i)))));
}

UElt UAlgebra::from_uplus(const FreeElt& x) const {
    UElt r;
    for (const auto& [w, c] : x) r.add(UKey{"", zero_vec(rank()), w}, c);
    return r;
}

UElt UAlgebra::from_uminus(const FreeElt& x) const {
    UElt r;
    for (const auto& [w, c] : x) r.add(UKey{w, zero_vec(rank()), ""}, c);
    return r;
}

bool UAlgebra::in_uplus(const UElt& x) const {
    for (const auto& [k, c] : x)
        if (!k.f.empty() || !is_zero(k.k)) return false;
    return true;
}

bool UAlgebra::in_uge(const UElt& x) const {
    for (const auto& [k, c] : x)
        if (!k.f.empty()) return false;
    return true;
}

FreeElt UAlgebra::to_uplus(const UElt& x) const {
    if (!in_uplus(x)) throw NotInSubalgebra("element has F or K parts");
    FreeElt r;
    for (const auto& [k, c] : x) r.add(k.e, c);
    return r;
}

UElt UAlgebra::right_mul_E(const UElt& x, int a) const {
    UElt r;
    for (const auto& [k, c] : x) {
        FreeElt e = nf_.reduce(FreeElt(k.e + static_cast<char>(a), c));
        for (const auto& [w, cw] : e) r.add(UKey{k.f, k.k, w}, cw);
    }
    return r;
}

const UElt& UAlgebra::straighten(const Letters& e, const Letters& f) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(e, f);
    auto it = straighten_cache_.find(key);
    if (it != straighten_cache_.end()) return it->second;

    const RootSystem& rs = roots();
    UElt out;
    if (e.empty()) {
        for (const auto& [w, c] : nf_.reduce(FreeElt(f, QRat(1)))) out.add(UKey{w, zero_vec(rank()), ""}, c);
    } else if (f.empty()) {
        for (const auto& [w, c] : nf_.reduce(FreeElt(e, QRat(1)))) out.add(UKey{"", zero_vec(rank()), w}, c);
    } else {
        const int a = e.back();
        const Letters head = e.substr(0, e.size() - 1);
        out = right_mul_E(straighten(head, f), a);
        const QVec alpha = rs.simple_root(a);
        const int da = rs.symmetrizer(a);
        const QRat denom = QRat::q_power(da) - QRat::q_power(-da);
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k] != a) continue;
            const Letters rest = f.substr(k + 1);
            const long p = rs.bilinear(alpha, weight_of(rs, rest));
            const Letters cut = f.substr(0, k) + rest;
            const UElt& sub = straighten(head, cut);
            for (int sign : {1, -1}) {
                QRat c = QRat::q_power(static_cast<int>(-sign * p)) / denom;
                if (sign < 0) c = -c;
                for (const auto& [key2, c2] : sub) {
                    // E'' K^{sign} = q^{-(sign alpha, wt E'')} K^{sign} E''
                    const long p2 = rs.bilinear(alpha, weight_of(rs, key2.e));
                    out.add(UKey{key2.f, key2.k + sign * alpha, key2.e},
                            c * c2 * QRat::q_power(static_cast<int>(-sign * p2)));
                }
            }
        }
    }
    return straighten_cache_.emplace(key, std::move(out)).first->second;
}

UElt UAlgebra::term_mul(const UKey& a, const UKey& b) const {
    const RootSystem& rs = roots();
    UElt out;
    const UElt mid = straighten(a.e, b.f);
    for (const auto& [m, cm] : mid) {
        // K_{a.k} F_{m.f} = q^{-(a.k, wt m.f)} F_{m.f} K_{a.k}
        // E_{m.e} K_{b.k} = q^{-(b.k, wt m.e)} K_{b.k} E_{m.e}
        const long p = rs.bilinear(a.k, weight_of(rs, m.f)) + rs.bilinear(b.k, weight_of(rs, m.e));
        const QRat c = cm * QRat::q_power(static_cast<int>(-p));
        const FreeElt fpart = nf_.reduce(FreeElt(a.f + m.f, QRat(1)));
        const FreeElt epart = nf_.reduce(FreeElt(m.e + b.e, QRat(1)));
        const QVec k = a.k + m.k + b.k;
        for (const auto& [fw, cf] : fpart)
            for (const auto& [ew, ce] : epart) out.add(UKey{fw, k, ew}, c * cf * ce);
    }
    return out;
}

UElt UAlgebra::mul(const UElt& a, const UElt& b) const {
    UElt out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add_scaled(term_mul(ka, kb), ca * cb);
    return out;
}

UElt UAlgebra::pow(const UElt& x, int n) const {
    UElt r = one();
    for (int k = 0; k < n; ++k) r = mul(r, x);
    return r;
}

UElt UAlgebra::normal_form(const std::vector<Gen>& word) const {
    UElt r = one();
    for (const auto& g : word) {
        switch (g.kind) {
        case Gen::Kind::E: r = mul(r, E(g.index)); break;
        case Gen::Kind::F: r = mul(r, F(g.index)); break;
        case Gen::Kind::K: r = mul(r, K(g.kexp)); break;
        }
    }
    return r;
}

UElt UAlgebra::generator_image(int a, bool inverse, Gen::Kind kind, int b) const {
    const RootSystem& rs = roots();
    const QVec alpha = rs.simple_root(a);
    const long aa = rs.bilinear(alpha, alpha);
    if (b == a) {
        if (kind == Gen::Kind::E) {
            // T(E) = -F K, T^{-1}(E) = -K^{-1} F = -q^{(a,a)} F K^{-1}
            if (!inverse) return mul(F(a), K(alpha)).scaled(QRat(-1));
            return mul(F(a), K(-alpha)).scaled(-QRat::q_power(static_cast<int>(aa)));
        }
        // T(F) = -K^{-1} E, T^{-1}(F) = -E K = -q^{-(a,a)} K E
        if (!inverse) return mul(K(-alpha), E(a)).scaled(QRat(-1));
        return mul(K(alpha), E(a)).scaled(-QRat::q_power(static_cast<int>(-aa)));
    }
    const int r = -rs.cartan()[a][b];
    const int da = rs.symmetrizer(a);
    UElt out;
    for (int i = 0; i <= r; ++i) {
        QRat c = QRat::q_power(kind == Gen::Kind::E ? -da * i : da * i);
        if (i % 2) c = -c;
        UElt t;
        if (kind == Gen::Kind::E) {
            // forward: E^{(r-i)} E_b E^{(i)}; inverse: E^{(i)} E_b E^{(r-i)}
            const int left = inverse ? i : r - i;
            t = mul(mul(divided_E(a, left), E(b)), divided_E(a, r - left));
        } else {
            // forward: F^{(i)} F_b F^{(r-i)}; inverse: F^{(r-i)} F_b F^{(i)}
            const int left = inverse ? r - i : i;
            t = mul(mul(divided_F(a, left), F(b)), divided_F(a, r - left));
        }
        out.add_scaled(t, c);
    }
    return out;
}

const UElt& UAlgebra::word_image(int a, bool inverse, Gen::Kind kind, const Letters& w) const {
    std::lock_guard lock(mu_);
    auto key = std::make_tuple(a, inverse, kind == Gen::Kind::E ? 0 : 1, w);
    auto it = image_cache_.find(key);
    if (it != image_cache_.end()) return it->second;
    UElt out;
    if (w.empty()) {
        out = one();
    } else {
        const UElt& head = word_image(a, inverse, kind, w.substr(0, w.size() - 1));
        out = mul(head, generator_image(a, inverse, kind, w.back()));
    }
    return image_cache_.emplace(key, std::move(out)).first->second;
}

UElt UAlgebra::apply_symmetry(int a, bool inverse, const UElt& x) const {
    if (a < 0 || a >= rank()) throw BadIndex("simple index out of range");
    const RootSystem& rs = roots();
    const QVec alpha = rs.simple_root(a);
    UElt out;
    for (const auto& [k, c] : x) {
        // s_alpha is an involution, so T and T^{-1} act alike on U^0
        QVec sk = k.k - rs.coroot_pairing(k.k, a) * alpha;
        UElt t = mul(word_image(a, inverse, Gen::Kind::F, k.f), K(sk));
        t = mul(t, word_image(a, inverse, Gen::Kind::E, k.e));
        out.add_scaled(t, c);
    }
    return out;
}

UElt UAlgebra::lusztig_T(int a, const UElt& x) const { return apply_symmetry(a, false, x); }
UElt UAlgebra::lusztig_T_inv(int a, const UElt& x) const { return apply_symmetry(a, true, x); }

} // namespace qborel
