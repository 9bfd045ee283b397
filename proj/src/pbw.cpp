#include "qborel/pbw.hpp"

#include "qborel/errors.hpp"

#include <algorithm>

namespace qborel {

namespace {

bool contains(const IndexSet& s, int k) { return std::binary_search(s.begin(), s.end(), k); }

bool supported_on(const Exponents& a, const IndexSet& s) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && !contains(s, static_cast<int>(k))) return false;
    return true;
}

IndexSet normalized(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

std::vector<FreeElt> root_vectors(const UAlgebra& alg, const Word& word) {
    std::vector<FreeElt> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        UElt x = alg.E(word[i]);
        for (std::size_t k = i; k-- > 0;) x = alg.lusztig_T(word[k], x);
        if (!alg.in_uplus(x)) throw InternalContradiction("root vector left U^+; word not reduced?");
        out.push_back(alg.to_uplus(x));
    }
    return out;
}

PbwBasis::PbwBasis(const UAlgebra& alg, Word word) : alg_(alg), word_(std::move(word)) {
    roots_ = roots_of_word(alg_.roots(), word_);
    vectors_ = qborel::root_vectors(alg_, word_);
}

std::vector<Exponents> PbwBasis::monomials_of_weight(const QVec& mu) const {
    std::vector<Exponents> out;
    const int t = length();
    Exponents a(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int k, const QVec& rest) -> void {
        if (k == t) {
            if (is_zero(rest)) out.push_back(a);
            return;
        }
        QVec r = rest;
        for (int e = 0; in_positive_cone(r); ++e) {
            a[static_cast<std::size_t>(k)] = e;
            self(self, k + 1, r);
            r = r - roots_[static_cast<std::size_t>(k)];
        }
        a[static_cast<std::size_t>(k)] = 0;
    };
    if (in_positive_cone(mu)) rec(rec, 0, mu);
    std::sort(out.begin(), out.end());
    return out;
}

const FreeElt& PbwBasis::monomial(const Exponents& a) const {
    std::lock_guard lock(mu_);
    if (static_cast<int>(a.size()) != length()) throw DimensionMismatch("exponent vector has wrong length");
    auto it = mono_cache_.find(a);
    if (it != mono_cache_.end()) return it->second;
    FreeElt x(Letters(), QRat(1));
    for (int k = length(); k-- > 0;)
        for (int e = 0; e < a[static_cast<std::size_t>(k)]; ++e) x = alg_.nf().mul(x, vectors_[static_cast<std::size_t>(k)]);
    return mono_cache_.emplace(a, std::move(x)).first->second;
}

FreeElt PbwBasis::evaluate(const PBWVec& v) const {
    FreeElt x;
    for (const auto& [a, c] : v.terms) x.add_scaled(monomial(a), c);
    return x;
}

const PbwBasis::Solver& PbwBasis::solver(const QVec& mu) const {
    std::lock_guard lock(mu_);
    auto it = solvers_.find(mu);
    if (it != solvers_.end()) return it->second;
    Solver s;
    s.monomials = monomials_of_weight(mu);
    const int d = alg_.nf().dim(mu);
    s.ech = RowEchelon<QRat>(static_cast<std::size_t>(d), true);
    for (const auto& a : s.monomials) {
        auto coords = nf_plus(alg_.nf(), monomial(a));
        std::vector<QRat> v(static_cast<std::size_t>(d));
        if (auto f = coords.find(mu); f != coords.end()) v = f->second;
        if (!s.ech.insert(std::move(v))) throw InternalContradiction("PBW monomials of weight " + to_string(mu) + " are dependent");
    }
    return solvers_.emplace(mu, std::move(s)).first->second;
}

PBWVec PbwBasis::expand(const FreeElt& x) const {
    PBWVec out{word_, {}};
    for (const auto& [mu, coords] : nf_plus(alg_.nf(), x)) {
        const Solver& s = solver(mu);
        auto sol = s.ech.solve(coords);
        if (!sol) throw NotInSubalgebra("component of weight " + to_string(mu) + " is not in U^+[w]");
        for (std::size_t k = 0; k < sol->size(); ++k) out.terms.add(s.monomials[k], (*sol)[k]);
    }
    return out;
}

PBWVec PbwBasis::unit(int k) const {
    if (k < 0 || k >= length()) throw BadIndex("root position out of range");
    Exponents a(static_cast<std::size_t>(length()), 0);
    a[static_cast<std::size_t>(k)] = 1;
    return PBWVec{word_, Terms<Exponents>(a, QRat(1))};
}

const PBWVec& PbwBasis::ls_relation(int i, int j) const {
    if (i < 0 || j >= length() || i >= j) throw BadIndex("LS relation needs 1 <= i < j <= t");
    std::lock_guard lock(mu_);
    auto key = std::make_pair(i, j);
    auto it = ls_cache_.find(key);
    if (it != ls_cache_.end()) return it->second;
    const auto& ei = vectors_[static_cast<std::size_t>(i)];
    const auto& ej = vectors_[static_cast<std::size_t>(j)];
    const long p = alg_.roots().bilinear(roots_[static_cast<std::size_t>(i)], roots_[static_cast<std::size_t>(j)]);
    FreeElt x = alg_.nf().mul(ei, ej) - alg_.nf().mul(ej, ei).scaled(QRat::q_power(static_cast<int>(p)));
    return ls_cache_.emplace(key, expand(x)).first->second;
}

QRat char_eval(const std::vector<QRat>& values, const PBWVec& x) {
    QRat total;
    for (const auto& [a, c] : x.terms) {
        if (a.size() != values.size()) throw DimensionMismatch("character and PBW vector disagree on t");
        QRat m = c;
        for (std::size_t k = 0; k < a.size() && !m.is_zero(); ++k)
            if (a[k] != 0) m *= values[k].pow(a[k]);
        total += m;
    }
    return total;
}

bool char_well_defined(const PbwBasis& pbw, const IndexSet& theta_in, const std::vector<QRat>& f) {
    const IndexSet theta = normalized(theta_in);
    const int t = pbw.length();
    std::vector<QRat> values(static_cast<std::size_t>(t));
    for (std::size_t n = 0; n < theta.size(); ++n) {
        if (theta[n] < 0 || theta[n] >= t) throw BadIndex("root position out of range");
        const QRat& v = f.size() == theta.size() ? f[n] : f.at(static_cast<std::size_t>(theta[n]));
        if (v.is_zero()) throw InvalidTriple("character values must be nonzero");
        values[static_cast<std::size_t>(theta[n])] = v;
    }
    const RootSystem& rs = pbw.roots_system();
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            const QRat& fi = values[static_cast<std::size_t>(i)];
            const QRat& fj = values[static_cast<std::size_t>(j)];
            const long p = rs.bilinear(pbw.roots()[static_cast<std::size_t>(i)], pbw.roots()[static_cast<std::size_t>(j)]);
            QRat lhs = fi * fj - QRat::q_power(static_cast<int>(p)) * fj * fi;
            if (!(lhs == char_eval(values, pbw.ls_relation(i, j)))) return false;
        }
    return true;
}

bool char_well_defined_generic(const PbwBasis& pbw, const IndexSet& theta_in) {
    // Left side: (1 - q^{(beta_i,beta_j)}) f_i f_j if i, j in theta.
    // Right side: sum over a supported on theta of c_a f^a; the exponent
    // vectors a vanish at i and j, so no term meets the left monomial and
    // both sides must vanish separately.
    const IndexSet theta = normalized(theta_in);
    const RootSystem& rs = pbw.roots_system();
    const int t = pbw.length();
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (contains(theta, i) && contains(theta, j) &&
                rs.bilinear(pbw.roots()[static_cast<std::size_t>(i)], pbw.roots()[static_cast<std::size_t>(j)]) != 0)
                return false;
            for (const auto& [a, c] : pbw.ls_relation(i, j).terms)
                if (supported_on(a, theta)) return false;
        }
    return true;
}

bool is_in_P_Theta(const IndexSet& theta_in, const PBWVec& x) {
    const IndexSet theta = normalized(theta_in);
    for (const auto& [a, c] : x.terms)
        if (supported_on(a, theta)) return false;
    return true;
}

bool quotient_is_commutative_polynomial(const PbwBasis& pbw, const IndexSet& theta_in) {
    const IndexSet theta = normalized(theta_in);
    const RootSystem& rs = pbw.roots_system();
    const int t = pbw.length();
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (contains(theta, i) && contains(theta, j) &&
                rs.bilinear(pbw.roots()[static_cast<std::size_t>(i)], pbw.roots()[static_cast<std::size_t>(j)]) != 0)
                return false;
            if (!is_in_P_Theta(theta, pbw.ls_relation(i, j))) return false;
        }
    return true;
}

std::vector<IndexSet> enumerate_polynomial_ideals(const PbwBasis& pbw) {
    const int t = pbw.length();
    if (t > 20) throw BadIndex("too many roots for exhaustive subset search");
    std::vector<IndexSet> out;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        IndexSet s;
        for (int k = 0; k < t; ++k)
            if (mask & (1u << k)) s.push_back(k);
        if (!quotient_is_commutative_polynomial(pbw, s)) continue;
        bool generators_survive = true;
        for (int k : s) generators_survive = generators_survive && !is_in_P_Theta(s, pbw.unit(k));
        if (generators_survive) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace qborel
