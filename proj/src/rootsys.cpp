#include "qborel/rootsys.hpp"

#include "qborel/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qborel {

QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

QVec operator-(const QVec& a) {
    QVec r(a);
    for (auto& x : r) x = -x;
    return r;
}

QVec operator*(int c, const QVec& a) {
    QVec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool in_positive_cone(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

namespace {

IntMatrix chain_cartan(int n) {
    IntMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

IntMatrix simple_cartan(char family, int n) {
    switch (family) {
    case 'A':
        if (n < 1) break;
        return chain_cartan(n);
    case 'B': {
        if (n < 2) break;
        IntMatrix a = chain_cartan(n);
        if (n == 2) {
            // alpha_1 short, alpha_2 long
            a[0][1] = -2;
            a[1][0] = -1;
        } else {
            a[n - 1][n - 2] = -2; // alpha_n short
        }
        return a;
    }
    case 'C': {
        if (n < 2) break;
        IntMatrix a = chain_cartan(n);
        a[n - 2][n - 1] = -2; // alpha_n long
        return a;
    }
    case 'D': {
        if (n < 4) break;
        IntMatrix a = chain_cartan(n);
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
        return a;
    }
    case 'E': {
        if (n < 6 || n > 8) break;
        IntMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < n; ++i) link(i, i + 1);
        return a;
    }
    case 'F': {
        if (n != 4) break;
        IntMatrix a = chain_cartan(4);
        a[2][1] = -2; // alpha_3, alpha_4 short
        return a;
    }
    case 'G': {
        if (n != 2) break;
        return {{2, -3}, {-1, 2}};
    }
    default:
        break;
    }
    throw InvalidCartan(std::string("unknown type ") + family + std::to_string(n));
}

// Leading principal minors of a symmetric integer matrix, exactly.
bool positive_definite(const IntMatrix& b) {
    const std::size_t n = b.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = b[i][j];
    // Gaussian elimination without pivoting: pivots are ratios of successive
    // leading minors, so all are positive iff the form is positive definite.
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m[k][k]) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

} // namespace

RootSystem RootSystem::from_type(const std::string& type) {
    std::vector<IntMatrix> blocks;
    std::size_t pos = 0;
    while (pos <= type.size()) {
        std::size_t next = type.find_first_of("x+", pos);
        if (next == std::string::npos) next = type.size();
        std::string part = type.substr(pos, next - pos);
        if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
            throw InvalidCartan("cannot parse type '" + type + "'");
        int n = 0;
        for (std::size_t i = 1; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw InvalidCartan("cannot parse type '" + type + "'");
            n = n * 10 + (part[i] - '0');
            if (n > 64) throw InvalidCartan("rank too large in '" + type + "'");
        }
        blocks.push_back(simple_cartan(static_cast<char>(std::toupper(static_cast<unsigned char>(part[0]))), n));
        pos = next + 1;
    }
    std::size_t total = 0;
    for (auto& b : blocks) total += b.size();
    IntMatrix a(total, std::vector<int>(total, 0));
    std::size_t off = 0;
    for (auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return from_cartan(a, type);
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan, std::string label) {
    const int n = static_cast<int>(cartan.size());
    if (n == 0) throw InvalidCartan("empty Cartan matrix");
    for (const auto& row : cartan)
        if (static_cast<int>(row.size()) != n) throw InvalidCartan("Cartan matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (cartan[i][i] != 2) throw InvalidCartan("diagonal entries must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw InvalidCartan("off-diagonal entries must be <= 0");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw InvalidCartan("a_ij = 0 must imply a_ji = 0");
        }
    }

    // Symmetrizer per connected component: d_i a_ij = d_j a_ji.
    std::vector<Rat> d(static_cast<std::size_t>(n), Rat(0));
    std::vector<int> dint(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (sgn(d[start]) != 0) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        d[start] = 1;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            comp.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan[i][j] == 0) continue;
                Rat dj = d[i] * cartan[i][j] / cartan[j][i];
                if (sgn(d[j]) == 0) {
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw InvalidCartan("Cartan matrix is not symmetrizable");
                }
            }
        }
        Rat mn = d[comp[0]];
        for (int i : comp) mn = std::min(mn, d[i]);
        for (int i : comp) {
            Rat v = d[i] / mn;
            if (v.get_den() != 1 || v > 3) throw InvalidCartan("symmetrizer outside {1,2,3}");
            dint[i] = static_cast<int>(v.get_num().get_si());
        }
    }

    RootSystem rs;
    rs.rank_ = n;
    rs.label_ = std::move(label);
    rs.cartan_ = cartan;
    rs.d_ = dint;
    rs.gram_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs.gram_[i][j] = dint[i] * cartan[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.gram_[i][j] != rs.gram_[j][i]) throw InvalidCartan("diag(d)*A is not symmetric");
    if (!positive_definite(rs.gram_)) throw InvalidCartan("Cartan matrix is not of finite type");

    // Reflection closure of the simple roots inside the positive cone.
    std::set<QVec> seen;
    std::deque<QVec> queue;
    for (int i = 0; i < n; ++i) {
        QVec e = rs.simple_root(i);
        seen.insert(e);
        queue.push_back(e);
    }
    constexpr std::size_t kMaxRoots = 20000;
    while (!queue.empty()) {
        QVec r = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            QVec s = rs.simple_reflect(i, r);
            if (is_zero(s) || !in_positive_cone(s) || seen.count(s)) continue;
            seen.insert(s);
            queue.push_back(s);
            if (seen.size() > kMaxRoots) throw InvalidCartan("root closure does not terminate");
        }
    }
    std::vector<QVec> roots(seen.begin(), seen.end());
    std::sort(roots.begin(), roots.end(), [](const QVec& a, const QVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.pos_roots_ = std::make_shared<const std::vector<QVec>>(std::move(roots));
    return rs;
}

std::optional<int> RootSystem::root_index(const QVec& v) const {
    const auto& roots = *pos_roots_;
    auto it = std::find(roots.begin(), roots.end(), v);
    if (it == roots.end()) return std::nullopt;
    return static_cast<int>(it - roots.begin());
}

bool RootSystem::is_root(const QVec& v) const { return is_positive_root(v) || is_positive_root(-v); }

QVec RootSystem::simple_root(int i) const {
    QVec e(static_cast<std::size_t>(rank_), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

long RootSystem::bilinear(const QVec& x, const QVec& y) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) s += static_cast<long>(x[i]) * gram_[i][j] * y[j];
    }
    return s;
}

Rat RootSystem::bilinear(const QVec& x, const std::vector<Rat>& lambda) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += Rat(x[i] * gram_[i][j]) * lambda[static_cast<std::size_t>(j)];
    return s;
}

int RootSystem::coroot_pairing(const QVec& x, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * x[j];
    return s;
}

QVec RootSystem::simple_reflect(int i, const QVec& x) const {
    QVec r(x);
    r[static_cast<std::size_t>(i)] -= coroot_pairing(x, i);
    return r;
}

QVec RootSystem::reflect(const QVec& beta, const QVec& x) const {
    const long bb = bilinear(beta, beta);
    const long bx = bilinear(beta, x);
    const long c = 2 * bx / bb; // integral for roots
    QVec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= static_cast<int>(c) * beta[i];
    return r;
}

int RootSystem::height(const QVec& x) const {
    if (!in_positive_cone(x)) throw NotInPositiveCone(to_string(x));
    return std::accumulate(x.begin(), x.end(), 0);
}

std::vector<Rat> RootSystem::rho() const {
    std::vector<Rat> r(static_cast<std::size_t>(rank_), Rat(0));
    for (const auto& b : *pos_roots_)
        for (int i = 0; i < rank_; ++i) r[static_cast<std::size_t>(i)] += Rat(b[i], 2);
    return r;
}

std::vector<Rat> RootSystem::fundamental_weight(int i) const {
    // Solve gram * x = d_i e_i, so that (alpha_j, omega_i) = d_j delta_ij.
    const std::size_t n = static_cast<std::size_t>(rank_);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = gram_[r][c];
        m[r][n] = (static_cast<int>(r) == i) ? d_[r] : 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (sgn(m[p][k]) == 0) ++p;
        std::swap(m[p], m[k]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || sgn(m[r][k]) == 0) continue;
            Rat f = m[r][k] / m[k][k];
            for (std::size_t c = k; c <= n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = m[k][n] / m[k][k];
    return x;
}

// ---------------------------------------------------------------- lattices

namespace {

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
    return r;
}

long checked_sub(long a, long b) {
    long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
    return r;
}

using LRow = std::vector<long>;

// row_a <- row_a - f * row_b
void axpy(LRow& a, const LRow& b, long f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_sub(a[i], checked_mul(f, b[i]));
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<LRow> hnf_long(std::vector<LRow> rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // Euclid on column c among rows r..end until one nonzero remains.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || std::labs(rows[i][c]) < std::labs(rows[best][c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                axpy(rows[i], rows[r], rows[i][c] / rows[r][c]);
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) axpy(rows[i], rows[r], floor_div(rows[i][c], rows[r][c]));
        ++r;
    }
    rows.resize(r);
    return rows;
}

} // namespace

std::vector<QVec> hermite_normal_form(std::vector<QVec> rows, int ncols) {
    std::vector<LRow> lr;
    for (const auto& row : rows) {
        if (is_zero(row)) continue;
        lr.emplace_back(row.begin(), row.end());
    }
    auto h = hnf_long(std::move(lr), static_cast<std::size_t>(ncols));
    std::vector<QVec> out;
    for (const auto& row : h) {
        QVec v;
        for (long x : row) {
            if (x > INT32_MAX || x < INT32_MIN) throw Error("lattice entry exceeds int range");
            v.push_back(static_cast<int>(x));
        }
        out.push_back(std::move(v));
    }
    return out;
}

Lattice Lattice::from_generators(int dim, const std::vector<QVec>& gens) {
    Lattice l;
    l.dim_ = dim;
    l.basis_ = hermite_normal_form(gens, dim);
    return l;
}

Lattice Lattice::full(int dim) {
    std::vector<QVec> gens;
    for (int i = 0; i < dim; ++i) {
        QVec e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(e);
    }
    return from_generators(dim, gens);
}

bool Lattice::contains(const QVec& v) const {
    // Reduce against the echelon basis column by column.
    LRow r(v.begin(), v.end());
    for (const auto& b : basis_) {
        std::size_t c = 0;
        while (b[c] == 0) ++c;
        if (r[c] % b[c] != 0) return false;
        axpy(r, LRow(b.begin(), b.end()), r[c] / b[c]);
    }
    return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

bool lattice_leq(const Lattice& a, const Lattice& b) {
    return std::all_of(a.basis().begin(), a.basis().end(), [&](const QVec& v) { return b.contains(v); });
}

Lattice orthogonal_complement_lattice(const RootSystem& rs, const std::vector<QVec>& S) {
    const std::size_t n = static_cast<std::size_t>(rs.rank());
    const std::size_t k = S.size();
    // Rows: [ (gamma_basis_i, s_1), ..., (gamma_basis_i, s_k) | e_i ]
    std::vector<LRow> aug(n, LRow(k + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        QVec e = rs.simple_root(static_cast<int>(i));
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = rs.bilinear(e, S[j]);
        aug[i][k + i] = 1;
    }
    auto h = hnf_long(std::move(aug), k + n);
    std::vector<QVec> kernel;
    for (const auto& row : h) {
        if (!std::all_of(row.begin(), row.begin() + static_cast<long>(k), [](long x) { return x == 0; })) continue;
        QVec v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(static_cast<int>(row[k + i]));
        kernel.push_back(std::move(v));
    }
    return Lattice::from_generators(rs.rank(), kernel);
}

long kostant_partition_count(const RootSystem& rs, const QVec& mu) {
    if (!in_positive_cone(mu)) return 0;
    // Unbounded knapsack over the box 0 <= v <= mu in mixed-radix order, which
    // visits v - beta before v for every positive root beta.
    const std::size_t n = mu.size();
    std::vector<std::size_t> stride(n, 1);
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        stride[i] = size;
        size *= static_cast<std::size_t>(mu[i]) + 1;
    }
    std::vector<long> ways(size, 0);
    ways[0] = 1;
    for (const auto& beta : rs.positive_roots()) {
        bool fits = true;
        std::size_t offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
            fits = fits && beta[i] <= mu[i];
            offset += static_cast<std::size_t>(beta[i]) * stride[i];
        }
        if (!fits) continue;
        for (std::size_t idx = 0; idx < size; ++idx) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = static_cast<int>((idx / stride[i]) % (static_cast<std::size_t>(mu[i]) + 1)) >= beta[i];
            if (ok) ways[idx] += ways[idx - offset];
        }
    }
    return ways[size - 1];
}

} // namespace qborel
