#include "qborel/strata.hpp"

#include "qborel/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qborel {

namespace {

bool pairwise_orthogonal(const RootSystem& rs, const std::vector<QVec>& roots) {
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b)
            if (rs.bilinear(roots[a], roots[b]) != 0) return false;
    return true;
}

void check_word(const RootSystem& rs, const WeylElt& w, const Word& word) {
    if (!is_reduced(rs, word)) throw NotReduced("word is not reduced");
    if (!(WeylElt::from_word(rs, word) == w)) throw NotReduced("word does not represent w");
}

} // namespace

std::vector<QRat> CharacterData::values(int t) const {
    std::vector<QRat> v(static_cast<std::size_t>(t));
    const auto& idx = stratum.theta.indices;
    for (std::size_t n = 0; n < idx.size(); ++n) v.at(static_cast<std::size_t>(idx[n])) = f.at(n);
    return v;
}

WeylElt w_theta(const RootSystem& rs, const WeylElt& w, const std::vector<QVec>& roots) {
    if (!pairwise_orthogonal(rs, roots)) throw NotOrthogonal("roots are not pairwise orthogonal");
    WeylElt y = w;
    for (const auto& b : roots) y = WeylElt::reflection(rs, b) * y;
    return y;
}

bool in_Tw(const RootSystem& rs, const WeylElt& w, const std::vector<QVec>& roots) {
    if (!pairwise_orthogonal(rs, roots)) return false;
    auto inv = inversion_set(rs, w);
    for (const auto& b : roots)
        if (std::find(inv.begin(), inv.end(), b) == inv.end()) return false;
    std::set<QVec> distinct(roots.begin(), roots.end());
    if (distinct.size() != roots.size()) return false;
    return w_theta(rs, w, roots).length() == w.length() - static_cast<int>(roots.size());
}

std::vector<ThetaSet> enumerate_Tw(const RootSystem& rs, const WeylElt& w, const Word& word) {
    check_word(rs, w, word);
    const auto betas = roots_of_word(rs, word);
    const int t = static_cast<int>(betas.size());
    std::vector<ThetaSet> out;
    std::deque<ThetaSet> todo{ThetaSet{word, {}, {}}};
    while (!todo.empty()) {
        ThetaSet th = std::move(todo.front());
        todo.pop_front();
        const int start = th.indices.empty() ? 0 : th.indices.back() + 1;
        for (int k = start; k < t; ++k) {
            const auto& b = betas[static_cast<std::size_t>(k)];
            bool orth = true;
            for (const auto& r : th.roots) orth = orth && rs.bilinear(r, b) == 0;
            if (!orth) continue;
            ThetaSet next = th;
            next.indices.push_back(k);
            next.roots.push_back(b);
            if (w_theta(rs, w, next.roots).length() == w.length() - static_cast<int>(next.roots.size()))
                todo.push_back(std::move(next));
        }
        out.push_back(std::move(th));
    }
    std::sort(out.begin(), out.end(), [](const ThetaSet& a, const ThetaSet& b) {
        return a.indices.size() != b.indices.size() ? a.indices.size() < b.indices.size() : a.indices < b.indices;
    });
    return out;
}

WeylElt kappa(const RootSystem& rs, const WeylElt& w, const ThetaSet& theta) { return w_theta(rs, w, theta.roots); }

ThetaSet kappa_inverse(const RootSystem& rs, const WeylElt& w, const Word& word, const WeylElt& y) {
    for (auto& th : enumerate_Tw(rs, w, word))
        if (kappa(rs, w, th) == y) return th;
    throw NotInWw("element is not of the form w_Theta");
}

std::vector<Stratum> enumerate_strata(const RootSystem& rs, const WeylElt& w, const Word& word) {
    std::vector<Stratum> out;
    for (auto& th : enumerate_Tw(rs, w, word)) {
        WeylElt y = kappa(rs, w, th);
        const int dim = w.length() - y.length();
        out.push_back(Stratum{std::move(y), std::move(th), dim});
    }
    return out;
}

std::vector<QVec> support_of(const CharacterData& chr) { return chr.stratum.theta.roots; }

Lattice max_admissible_lattice(const RootSystem& rs, const CharacterData& chr) {
    return orthogonal_complement_lattice(rs, support_of(chr));
}

bool validate_triple(const RootSystem& rs, const CoidealTriple& t) {
    try {
        check_word(rs, t.w, t.word);
    } catch (const NotReduced&) {
        return false;
    }
    const Stratum& s = t.chr.stratum;
    if (s.theta.word != t.word) return false;
    const auto betas = roots_of_word(rs, t.word);
    if (s.theta.indices.size() != s.theta.roots.size()) return false;
    for (std::size_t n = 0; n < s.theta.indices.size(); ++n) {
        const int k = s.theta.indices[n];
        if (k < 0 || k >= static_cast<int>(betas.size()) || betas[static_cast<std::size_t>(k)] != s.theta.roots[n]) return false;
    }
    if (!in_Tw(rs, t.w, s.theta.roots)) return false;
    if (!(s.y == w_theta(rs, t.w, s.theta.roots)) || s.dim != static_cast<int>(s.theta.roots.size())) return false;
    if (t.chr.f.size() != s.theta.roots.size()) return false;
    for (const auto& v : t.chr.f)
        if (v.is_zero()) return false;
    if (t.L.dim() != rs.rank()) return false;
    return lattice_leq(t.L, max_admissible_lattice(rs, t.chr));
}

ClassificationReport classify(const RootSystem& rs, const WeylElt& w, const Word& word) {
    ClassificationReport rep;
    rep.type = rs.label();
    rep.word = word;
    const auto strata = enumerate_strata(rs, w, word);
    std::set<WeylElt> ys;
    for (const auto& s : strata) {
        ReportRow row;
        row.y_word = reduced_word(rs, s.y);
        row.theta_indices = s.theta.indices;
        row.theta_roots = s.theta.roots;
        row.dim = s.dim;
        row.lmax_basis = orthogonal_complement_lattice(rs, s.theta.roots).basis();
        rep.rows.push_back(std::move(row));
        ys.insert(s.y);
    }
    for (std::size_t a = 0; a < strata.size(); ++a)
        for (std::size_t b = 0; b < strata.size(); ++b)
            if (a != b && bruhat_le(rs, strata[a].y, strata[b].y))
                rep.bruhat.emplace_back(static_cast<int>(a), static_cast<int>(b));
    rep.tw_count = static_cast<int>(strata.size());
    rep.ww_count = static_cast<int>(ys.size());
    return rep;
}

} // namespace qborel
