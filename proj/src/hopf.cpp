#include "qborel/hopf.hpp"

#include "qborel/echelon.hpp"
#include "qborel/errors.hpp"

#include <map>

namespace qborel {

namespace {

UElt single(const UKey& k) { return UElt(k, QRat(1)); }

QVec zero_vec(int n) { return QVec(static_cast<std::size_t>(n), 0); }

long half_norm(const RootSystem& rs, const QVec& beta) { return rs.bilinear(beta, beta) / 2; }

} // namespace

TensorElt tensor(const UElt& a, const UElt& b) {
    TensorElt r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) r.add({ka, kb}, ca * cb);
    return r;
}

TensorElt tensor_mul(const UAlgebra& alg, const TensorElt& a, const TensorElt& b) {
    TensorElt r;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            UElt left = alg.mul(single(pa.first), single(pb.first));
            UElt right = alg.mul(single(pa.second), single(pb.second));
            for (const auto& [kl, cl] : left)
                for (const auto& [kr, cr] : right) r.add({kl, kr}, ca * cb * cl * cr);
        }
    return r;
}

TensorElt coproduct(const UAlgebra& alg, const UElt& x) {
    const RootSystem& rs = alg.roots();
    TensorElt out;
    std::map<char, TensorElt> gen;
    for (const auto& [k, c] : x) {
        if (!k.f.empty()) throw NotInSubalgebra("coproduct is implemented on U^{>=0} only");
        const UKey kk{"", k.k, ""};
        TensorElt t({kk, kk}, QRat(1));
        for (char a : k.e) {
            auto it = gen.find(a);
            if (it == gen.end()) {
                const UKey e{"", zero_vec(rs.rank()), Letters(1, a)};
                const UKey one{"", zero_vec(rs.rank()), ""};
                const UKey ka{"", rs.simple_root(a), ""};
                TensorElt d;
                d.add({e, one}, QRat(1));
                d.add({ka, e}, QRat(1));
                it = gen.emplace(a, std::move(d)).first;
            }
            t = tensor_mul(alg, t, it->second);
        }
        out.add_scaled(t, c);
    }
    return out;
}

QRat counit(const UElt& x) {
    QRat r;
    for (const auto& [k, c] : x)
        if (k.e.empty() && k.f.empty()) r += c;
    return r;
}

Tensor3 coproduct_left(const UAlgebra& alg, const TensorElt& x) {
    Tensor3 out;
    for (const auto& [p, c] : x)
        for (const auto& [q, cq] : coproduct(alg, single(p.first))) out.add({q.first, q.second, p.second}, c * cq);
    return out;
}

Tensor3 coproduct_right(const UAlgebra& alg, const TensorElt& x) {
    Tensor3 out;
    for (const auto& [p, c] : x)
        for (const auto& [q, cq] : coproduct(alg, single(p.second))) out.add({p.first, q.first, q.second}, c * cq);
    return out;
}

UElt psi(const UAlgebra& alg, const FreeElt& x) {
    const RootSystem& rs = alg.roots();
    UElt out;
    for (const auto& [w, c] : alg.nf().reduce(x)) {
        const QVec beta = weight_of(rs, w);
        // x K_{-beta} = q^{(beta,beta)} K_{-beta} x
        out.add(UKey{"", -beta, w}, c * QRat::q_power(static_cast<int>(half_norm(rs, beta))));
    }
    return out;
}

FreeElt psi_inverse(const UAlgebra& alg, const UElt& y) {
    const RootSystem& rs = alg.roots();
    FreeElt out;
    for (const auto& [k, c] : y) {
        const QVec beta = weight_of(rs, k.e);
        if (!k.f.empty() || k.k != -beta) throw NotInSubalgebra("element is not in the image of psi");
        out.add(k.e, c * QRat::q_power(static_cast<int>(-half_norm(rs, beta))));
    }
    return out;
}

std::vector<UElt> twist_generators(const PbwBasis& pbw, const CoidealTriple& t) {
    const UAlgebra& alg = pbw.algebra();
    const RootSystem& rs = alg.roots();
    if (t.word != pbw.word() || !validate_triple(rs, t)) throw InvalidTriple("(w, phi, L) is not admissible");
    const auto values = t.chr.values(pbw.length());
    std::vector<UElt> out;
    for (const auto& rv : pbw.root_vectors()) {
        std::map<UKey, UElt> legs;
        for (const auto& [p, c] : coproduct(alg, psi(alg, rv))) legs[p.second].add(p.first, c);
        UElt g;
        for (const auto& [right, left] : legs) {
            PBWVec v;
            try {
                v = pbw.expand(psi_inverse(alg, left));
            } catch (const NotInSubalgebra& e) {
                throw InternalContradiction(std::string("left coproduct leg outside psi(U^+[w]): ") + e.what());
            }
            g.add(right, char_eval(values, v));
        }
        out.push_back(std::move(g));
    }
    for (const auto& gamma : t.L.basis()) {
        out.push_back(alg.K(gamma));
        out.push_back(alg.K(-gamma));
    }
    return out;
}

CoidealReport coideal_check_report(const UAlgebra& alg, const std::vector<UElt>& gens, int h) {
    const RootSystem& rs = alg.roots();
    CoidealReport rep;
    std::vector<QVec> prefixes{zero_vec(rs.rank())};
    std::vector<std::pair<UElt, int>> moving;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!alg.in_uge(g)) {
            rep.failure = "generator outside U^{>=0}";
            return rep;
        }
        if (g.size() == 1 && g.begin()->first.e.empty()) {
            prefixes.push_back(g.begin()->first.k);
            continue;
        }
        int deg = 1;
        for (const auto& [k, c] : g) deg = std::max(deg, static_cast<int>(k.e.size()));
        moving.emplace_back(g, deg);
    }

    std::vector<UElt> products;
    auto grow = [&](auto&& self, const UElt& cur, int used) -> void {
        products.push_back(cur);
        for (const auto& [g, d] : moving)
            if (used + d <= h) self(self, alg.mul(cur, g), used + d);
    };
    grow(grow, alg.one(), 0);

    std::vector<UElt> span;
    for (const auto& k : prefixes)
        for (const auto& p : products) span.push_back(alg.mul(alg.K(k), p));

    std::map<UKey, std::size_t> col;
    for (const auto& x : span)
        for (const auto& [k, c] : x) col.emplace(k, 0);
    std::size_t n = 0;
    for (auto& [k, idx] : col) idx = n++;

    auto to_vec = [&](const UElt& x) -> std::optional<std::vector<QRat>> {
        std::vector<QRat> v(n);
        for (const auto& [k, c] : x) {
            auto it = col.find(k);
            if (it == col.end()) return std::nullopt;
            v[it->second] = c;
        }
        return v;
    };
    auto in_v = [&](const RowEchelon<QRat>& ech, const UElt& x) {
        auto v = to_vec(x);
        return v && ech.in_span(*v);
    };

    RowEchelon<QRat> ech(n);
    std::vector<const UElt*> basis;
    for (const auto& x : span)
        if (ech.insert(*to_vec(x))) basis.push_back(&x);
    rep.span_dim = basis.size();

    rep.graded = true;
    for (const UElt* x : basis) {
        std::map<QVec, UElt> parts;
        for (const auto& [k, c] : *x) parts[k.k].add(k, c);
        for (const auto& [kk, part] : parts)
            if (!in_v(ech, part)) {
                rep.graded = false;
                rep.failure = "K-homogeneous component outside the span";
            }
    }

    rep.ad_stable = true;
    for (const auto& k : prefixes)
        for (const auto& [g, d] : moving)
            if (d <= h && !in_v(ech, alg.mul(alg.mul(alg.K(k), g), alg.K(-k)))) {
                rep.ad_stable = false;
                rep.failure = "K g K^{-1} outside the span";
            }

    rep.coideal = true;
    for (const UElt* x : basis) {
        std::map<UKey, UElt> legs;
        for (const auto& [p, c] : coproduct(alg, *x)) legs[p.second].add(p.first, c);
        for (const auto& [right, left] : legs)
            if (!in_v(ech, left)) {
                rep.coideal = false;
                rep.failure = "left coproduct leg outside the span";
                break;
            }
        if (!rep.coideal) break;
    }
    return rep;
}

} // namespace qborel
