#include "qborel/weyl.hpp"

#include "qborel/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qborel {

namespace {

bool is_negative(const QVec& v) {
    bool any = false;
    for (int x : v) {
        if (x > 0) return false;
        if (x < 0) any = true;
    }
    return any;
}

std::vector<int> simple_matrix(const RootSystem& rs, int i) {
    const int n = rs.rank();
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(j * n + j)] = 1;
        m[static_cast<std::size_t>(i * n + j)] -= rs.cartan()[i][j];
    }
    return m;
}

void check_index(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.rank()) throw BadIndex("simple index " + std::to_string(i + 1) + " out of range");
}

QVec to_positive(const QVec& v) { return is_negative(v) ? -v : v; }

WeylElt left_reflect(const RootSystem& rs, const QVec& beta, const WeylElt& w) {
    return WeylElt::reflection(rs, beta) * w;
}

} // namespace

WeylElt::WeylElt(int rank, std::vector<int> action, std::shared_ptr<const std::vector<QVec>> roots)
    : rank_(rank), action_(std::move(action)), roots_(std::move(roots)) {
    for (const auto& b : *roots_)
        if (is_negative(apply(b))) ++length_;
}

WeylElt WeylElt::identity(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return WeylElt(n, std::move(m), rs.positive_roots_ptr());
}

WeylElt WeylElt::simple(const RootSystem& rs, int i) {
    check_index(rs, i);
    return WeylElt(rs.rank(), simple_matrix(rs, i), rs.positive_roots_ptr());
}

WeylElt WeylElt::from_word(const RootSystem& rs, const Word& word) {
    WeylElt w = identity(rs);
    for (int a : word) w = w * simple(rs, a);
    return w;
}

WeylElt WeylElt::reflection(const RootSystem& rs, const QVec& beta) {
    if (!rs.is_root(beta)) throw NotInPositiveCone("not a root: " + to_string(beta));
    const int n = rs.rank();
    std::vector<int> m(static_cast<std::size_t>(n * n));
    for (int j = 0; j < n; ++j) {
        QVec img = rs.reflect(beta, rs.simple_root(j));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + j)] = img[static_cast<std::size_t>(i)];
    }
    return WeylElt(n, std::move(m), rs.positive_roots_ptr());
}

QVec WeylElt::apply(const QVec& x) const {
    QVec y(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i) {
        long s = 0;
        for (int j = 0; j < rank_; ++j) s += static_cast<long>(entry(i, j)) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = static_cast<int>(s);
    }
    return y;
}

std::vector<Rat> WeylElt::apply(const std::vector<Rat>& x) const {
    std::vector<Rat> y(static_cast<std::size_t>(rank_), Rat(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) y[static_cast<std::size_t>(i)] += entry(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

WeylElt WeylElt::inverse() const {
    // Gauss-Jordan over Q; the result is integral since det = +-1.
    const int n = rank_;
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = entry(i, j);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        Rat inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<int> m(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] = static_cast<int>(a[i][n + j].get_num().get_si());
    return WeylElt(n, std::move(m), roots_);
}

bool WeylElt::is_identity() const {
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (entry(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    const int n = a.rank_;
    if (b.rank_ != n) throw DimensionMismatch("Weyl group elements of different rank");
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a.entry(i, k);
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] += x * b.entry(k, j);
        }
    return WeylElt(n, std::move(m), a.roots_);
}

bool is_left_descent(const RootSystem& rs, const WeylElt& w, int i) {
    check_index(rs, i);
    return is_negative(w.inverse().apply(rs.simple_root(i)));
}

bool is_right_descent(const RootSystem& rs, const WeylElt& w, int i) {
    check_index(rs, i);
    return is_negative(w.apply(rs.simple_root(i)));
}

Word reduced_word(const RootSystem& rs, const WeylElt& w) {
    // Left descents of w are right descents of x = w^{-1}; peel them off x.
    WeylElt x = w.inverse();
    Word word;
    while (!x.is_identity()) {
        int i = 0;
        while (!is_right_descent(rs, x, i)) ++i;
        word.push_back(i);
        x = x * WeylElt::simple(rs, i);
    }
    return word;
}

std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElt& w) {
    if (w.is_identity()) return {Word{}};
    std::vector<Word> out;
    for (int i = 0; i < rs.rank(); ++i) {
        if (!is_left_descent(rs, w, i)) continue;
        for (auto& tail : all_reduced_words(rs, WeylElt::simple(rs, i) * w)) {
            Word word{i};
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_reduced(const RootSystem& rs, const Word& word) {
    return WeylElt::from_word(rs, word).length() == static_cast<int>(word.size());
}

std::vector<QVec> roots_of_word(const RootSystem& rs, const Word& word) {
    std::vector<QVec> out;
    WeylElt prefix = WeylElt::identity(rs);
    for (int a : word) {
        QVec beta = prefix.apply(rs.simple_root(a));
        if (is_negative(beta)) throw NotReduced("word is not reduced at position " + std::to_string(out.size() + 1));
        out.push_back(std::move(beta));
        prefix = prefix * WeylElt::simple(rs, a);
    }
    return out;
}

std::vector<QVec> inversion_set(const RootSystem& rs, const WeylElt& w) {
    WeylElt inv = w.inverse();
    std::vector<QVec> out;
    for (const auto& b : rs.positive_roots())
        if (is_negative(inv.apply(b))) out.push_back(b);
    return out;
}

bool bruhat_le(const RootSystem& rs, const WeylElt& u, const WeylElt& v) {
    if (u.length() > v.length()) return false;
    Word word = reduced_word(rs, v);
    WeylElt x = u;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        if (is_right_descent(rs, x, *it)) x = x * WeylElt::simple(rs, *it);
    return x.is_identity();
}

std::vector<WeylElt> enumerate_group(const RootSystem& rs) {
    std::set<WeylElt> seen{WeylElt::identity(rs)};
    std::deque<WeylElt> todo{WeylElt::identity(rs)};
    while (!todo.empty()) {
        WeylElt w = todo.front();
        todo.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            WeylElt x = w * WeylElt::simple(rs, i);
            if (seen.insert(x).second) todo.push_back(x);
        }
    }
    std::vector<WeylElt> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const WeylElt& a, const WeylElt& b) { return a.length() < b.length(); });
    return out;
}

WeylElt longest_element(const RootSystem& rs) {
    WeylElt w = WeylElt::identity(rs);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < rs.rank(); ++i)
            if (!is_right_descent(rs, w, i)) {
                w = w * WeylElt::simple(rs, i);
                grew = true;
            }
    }
    return w;
}

Rat pair_with_weight(const RootSystem& rs, const QVec& beta, const WeylElt& u, const std::vector<Rat>& lambda) {
    std::vector<Rat> ul = u.apply(lambda);
    return rs.bilinear(beta, ul);
}

Rat pair_with_rho(const RootSystem& rs, const QVec& beta, const WeylElt& u) {
    return pair_with_weight(rs, beta, u, rs.rho());
}

BruhatEquivalence weyl_bruhat_equiv(const RootSystem& rs, const WeylElt& u, const QVec& beta) {
    if (!rs.is_positive_root(beta)) throw NotInPositiveCone("not a positive root: " + to_string(beta));
    BruhatEquivalence e{};
    e.reflection_descends = left_reflect(rs, beta, u).length() < u.length();
    e.inverse_negative = is_negative(u.inverse().apply(beta));
    e.rho_pairing_negative = pair_with_rho(rs, beta, u) < 0;
    return e;
}

bool is_descending_chain(const RootSystem& rs, const WeylElt& w, const std::vector<QVec>& betas) {
    WeylElt x = w;
    for (const auto& b : betas) {
        if (!rs.is_positive_root(b)) return false;
        WeylElt y = left_reflect(rs, b, x);
        if (y.length() != x.length() - 1) return false;
        x = std::move(y);
    }
    return true;
}

std::array<QVec, 3> lemma12_step(const RootSystem& rs, const WeylElt& w, const QVec& alpha, const QVec& beta,
                                 const QVec& gamma) {
    for (const auto* r : {&alpha, &beta, &gamma})
        if (!rs.is_positive_root(*r)) throw InvalidChain("not a positive root: " + to_string(*r));
    if (rs.bilinear(beta, gamma) != 0) throw InvalidChain("(beta, gamma) must vanish");
    const long ab = rs.bilinear(alpha, beta);
    const long ag = rs.bilinear(alpha, gamma);
    if (ab == 0 && ag == 0) throw InvalidChain("alpha is orthogonal to beta and gamma");
    if (!is_descending_chain(rs, w, {gamma, beta, alpha})) throw InvalidChain("not a descending chain");

    const WeylElt target = left_reflect(rs, alpha, left_reflect(rs, beta, left_reflect(rs, gamma, w)));
    auto accept = [&](const std::array<QVec, 3>& r) {
        return rs.bilinear(r[1], r[2]) != 0 && is_descending_chain(rs, w, {r[2], r[1], r[0]}) &&
               left_reflect(rs, r[0], left_reflect(rs, r[1], left_reflect(rs, r[2], w))) == target;
    };

    std::array<QVec, 3> out;
    if (ab == 0) {
        out = {beta, alpha, gamma};
    } else if (ag == 0) {
        out = {gamma, alpha, beta};
    } else {
        // Case 1 and Case 2a rewrites for both orders of the commuting pair;
        // Case 1 needs s_alpha beta > 0, which can fail when (alpha, beta) > 0
        std::vector<std::array<QVec, 3>> cands;
        for (const auto& [b, g] : {std::pair{beta, gamma}, std::pair{gamma, beta}}) {
            const WeylElt v = left_reflect(rs, g, w);
            const std::array<QVec, 3> c1{to_positive(rs.reflect(alpha, b)), alpha, g};
            const std::array<QVec, 3> c2{b, to_positive(rs.reflect(b, alpha)), g};
            if (is_negative(v.inverse().apply(alpha))) {
                cands.push_back(c1);
                cands.push_back(c2);
            } else {
                cands.push_back(c2);
                cands.push_back(c1);
            }
        }
        auto hit = std::find_if(cands.begin(), cands.end(), accept);
        if (hit != cands.end()) {
            out = *hit;
        } else {
            bool found = false;
            const auto& pos = rs.positive_roots();
            for (std::size_t x = 0; x < pos.size() && !found; ++x)
                for (std::size_t y = 0; y < pos.size() && !found; ++y)
                    for (std::size_t z = 0; z < pos.size() && !found; ++z)
                        if (accept({pos[x], pos[y], pos[z]})) {
                            out = {pos[x], pos[y], pos[z]};
                            found = true;
                        }
            if (!found) throw InternalContradiction("no admissible rewrite of the chain");
        }
    }
    if (!accept(out)) throw InternalContradiction("rewritten chain fails its postcondition");
    return out;
}

std::vector<QVec> normalize_reflection_sequence(const RootSystem& rs, const WeylElt& w, std::vector<QVec> betas) {
    if (!is_descending_chain(rs, w, betas)) throw InvalidChain("not a descending chain");
    const int t = static_cast<int>(betas.size());
    int bi = -1, bj = -1;
    for (int gap = 1; gap < t && bi < 0; ++gap)
        for (int i = 0; i + gap < t; ++i)
            if (rs.bilinear(betas[i], betas[i + gap]) != 0) {
                bi = i;
                bj = i + gap;
                break;
            }
    if (bi < 0) throw NoNonorthogonalPair("all reflections are pairwise orthogonal");

    for (int k = bj; k > bi + 1; --k) std::swap(betas[k], betas[k - 1]);

    for (int i = bi; i > 0; --i) {
        if (rs.bilinear(betas[i - 1], betas[i]) != 0) continue;
        WeylElt base = w;
        for (int k = 0; k + 1 < i; ++k) base = left_reflect(rs, betas[k], base);
        auto r = lemma12_step(rs, base, betas[i + 1], betas[i], betas[i - 1]);
        betas[i + 1] = r[0];
        betas[i] = r[1];
        betas[i - 1] = r[2];
    }
    if (!is_descending_chain(rs, w, betas)) throw InternalContradiction("normalized sequence is not a chain");
    return betas;
}

} // namespace qborel
