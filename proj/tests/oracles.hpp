#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's Weyl, strata or normal-form code; only Cartan data and the root
// table are shared.

#include "qborel/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using qborel::QVec;
using qborel::RootSystem;

// Element of W as the images of the simple roots.
using Mat = std::vector<QVec>;

inline QVec reflect(const RootSystem& rs, const QVec& beta, const QVec& x) {
    const long num = 2 * rs.bilinear(x, beta);
    const long den = rs.bilinear(beta, beta);
    QVec r = x;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= static_cast<int>(num / den) * beta[k];
    return r;
}

inline QVec apply(const Mat& m, const QVec& x) {
    QVec r(x.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += x[j] * m[j][i];
    return r;
}

inline Mat identity(int n) {
    Mat m(static_cast<std::size_t>(n), QVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

// s_beta * m
inline Mat left_reflect(const RootSystem& rs, const QVec& beta, const Mat& m) {
    Mat r = m;
    for (auto& col : r) col = reflect(rs, beta, col);
    return r;
}

inline bool negative(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; }) &&
           std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
}

// l(u) = l(u^{-1}) = #{beta > 0 : u beta < 0}
inline int length(const RootSystem& rs, const Mat& m) {
    int n = 0;
    for (const auto& b : rs.positive_roots()) n += negative(apply(m, b));
    return n;
}

inline Mat from_word(const RootSystem& rs, const std::vector<int>& word) {
    Mat m = identity(rs.rank());
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = left_reflect(rs, rs.simple_root(*it), m);
    return m;
}

inline std::vector<QVec> roots_of_word(const RootSystem& rs, const std::vector<int>& word) {
    std::vector<QVec> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        QVec b = rs.simple_root(word[k]);
        for (std::size_t m = k; m-- > 0;) b = reflect(rs, rs.simple_root(word[m]), b);
        out.push_back(b);
    }
    return out;
}

// T^w by brute force over all subsets of positions.
inline std::set<std::vector<int>> tw_bruteforce(const RootSystem& rs, const std::vector<int>& word) {
    const auto betas = roots_of_word(rs, word);
    const Mat w = from_word(rs, word);
    const int lw = length(rs, w);
    const int t = static_cast<int>(betas.size());
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        std::vector<int> s;
        for (int k = 0; k < t; ++k)
            if (mask & (1u << k)) s.push_back(k);
        bool orth = true;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                orth = orth && rs.bilinear(betas[static_cast<std::size_t>(s[a])], betas[static_cast<std::size_t>(s[b])]) == 0;
        if (!orth) continue;
        Mat m = w;
        for (int k : s) m = left_reflect(rs, betas[static_cast<std::size_t>(k)], m);
        if (length(rs, m) == lw - static_cast<int>(s.size())) out.insert(s);
    }
    return out;
}

// Whole group by breadth-first search over simple reflections.
inline std::vector<Mat> group(const RootSystem& rs) {
    std::set<Mat> seen{identity(rs.rank())};
    std::vector<Mat> order{identity(rs.rank())};
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int i = 0; i < rs.rank(); ++i) {
            Mat m = left_reflect(rs, rs.simple_root(i), order[k]);
            if (seen.insert(m).second) order.push_back(m);
        }
    return order;
}

// Bruhat order as the transitive closure of u < s_beta u with l(s_beta u) > l(u).
class Bruhat {
public:
    explicit Bruhat(const RootSystem& rs) : elts_(group(rs)) {
        const std::size_t n = elts_.size();
        for (std::size_t k = 0; k < n; ++k) index_[elts_[k]] = k;
        le_.assign(n, std::vector<bool>(n, false));
        std::vector<int> len(n);
        for (std::size_t k = 0; k < n; ++k) len[k] = length(rs, elts_[k]);
        for (std::size_t k = 0; k < n; ++k) {
            le_[k][k] = true;
            for (const auto& b : rs.positive_roots()) {
                const std::size_t j = index_.at(left_reflect(rs, b, elts_[k]));
                if (len[j] > len[k]) le_[k][j] = true;
            }
        }
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t a = 0; a < n; ++a)
                if (le_[a][m])
                    for (std::size_t b = 0; b < n; ++b)
                        if (le_[m][b]) le_[a][b] = true;
    }
    bool le(const Mat& u, const Mat& v) const { return le_[index_.at(u)][index_.at(v)]; }
    const std::vector<Mat>& elements() const { return elts_; }

private:
    std::vector<Mat> elts_;
    std::map<Mat, std::size_t> index_;
    std::vector<std::vector<bool>> le_;
};

// ---------------------------------------------------------------- GF(p)

constexpr std::uint64_t P = 1000000007ULL;

inline std::uint64_t pw(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= P;
    while (e) {
        if (e & 1) r = r * b % P;
        b = b * b % P;
        e >>= 1;
    }
    return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pw(a, P - 2); }

// [n]_{q^d} at a point of GF(p)
inline std::uint64_t qint(std::uint64_t q, int n, int d) {
    std::uint64_t s = 0;
    const std::uint64_t qd2 = pw(q, static_cast<std::uint64_t>(2 * d));
    // q^{-d(n-1)} * (1 + q^{2d} + ... + q^{2d(n-1)})
    std::uint64_t term = 1;
    for (int k = 0; k < n; ++k) {
        s = (s + term) % P;
        term = term * qd2 % P;
    }
    return s * inv(pw(q, static_cast<std::uint64_t>(d * (n - 1 > 0 ? n - 1 : 0)))) % P;
}

inline std::uint64_t qbinom(std::uint64_t q, int m, int k, int d) {
    std::uint64_t num = 1, den = 1;
    for (int a = 1; a <= k; ++a) {
        num = num * qint(q, m - k + a, d) % P;
        den = den * qint(q, a, d) % P;
    }
    return num * inv(den) % P;
}

using PolyP = std::map<std::string, std::uint64_t>;

inline std::vector<std::string> words_of_weight(const QVec& mu) {
    std::vector<std::string> out;
    QVec left = mu;
    std::string cur;
    auto rec = [&](auto&& self) -> void {
        if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < left.size(); ++i)
            if (left[i] > 0) {
                --left[i];
                cur.push_back(static_cast<char>(i));
                self(self);
                cur.pop_back();
                ++left[i];
            }
    };
    rec(rec);
    return out;
}

inline std::uint64_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols) {
    std::uint64_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const std::uint64_t iv = inv(rows[r][c]);
        for (auto& x : rows[r]) x = x * iv % P;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && rows[k][c]) {
                const std::uint64_t f = rows[k][c];
                for (std::size_t j = 0; j < ncols; ++j) rows[k][j] = (rows[k][j] + P - f * rows[r][j] % P) % P;
            }
        ++r;
    }
    return r;
}

// dim of (free algebra / Serre ideal) in weight mu, at a random point q.
inline long free_mod_serre_dim(const RootSystem& rs, const QVec& mu, std::uint64_t q) {
    const int n = rs.rank();
    const auto words = words_of_weight(mu);
    std::map<std::string, std::size_t> col;
    for (std::size_t k = 0; k < words.size(); ++k) col[words[k]] = k;
    std::vector<std::vector<std::uint64_t>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int m = 1 - rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const int d = rs.symmetrizer(i);
            QVec nu(static_cast<std::size_t>(n), 0);
            nu[static_cast<std::size_t>(i)] = m;
            nu[static_cast<std::size_t>(j)] = 1;
            PolyP serre;
            for (int s = 0; s <= m; ++s) {
                std::string w(static_cast<std::size_t>(m - s), static_cast<char>(i));
                w.push_back(static_cast<char>(j));
                w.append(static_cast<std::size_t>(s), static_cast<char>(i));
                const std::uint64_t c = qbinom(q, m, s, d);
                serre[w] = (serre[w] + (s % 2 ? P - c : c)) % P;
            }
            QVec rest = mu;
            bool ok = true;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                rest[k] -= nu[k];
                ok = ok && rest[k] >= 0;
            }
            if (!ok) continue;
            for (const auto& uv : words_of_weight(rest))
                for (std::size_t cut = 0; cut <= uv.size(); ++cut) {
                    std::vector<std::uint64_t> row(words.size(), 0);
                    for (const auto& [w, c] : serre) {
                        const std::string full = uv.substr(0, cut) + w + uv.substr(cut);
                        auto& x = row[col.at(full)];
                        x = (x + c) % P;
                    }
                    rows.push_back(std::move(row));
                }
        }
    return static_cast<long>(words.size()) - static_cast<long>(rank_mod_p(std::move(rows), words.size()));
}

} // namespace oracle
