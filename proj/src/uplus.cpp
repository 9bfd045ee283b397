#include "qborel/uplus.hpp"

#include "qborel/echelon.hpp"
#include "qborel/errors.hpp"

namespace qborel {

Letters letters_of(std::initializer_list<int> idx) {
    Letters w;
    for (int i : idx) w.push_back(static_cast<char>(i));
    return w;
}

QVec weight_of(const RootSystem& rs, const Letters& w) {
    QVec mu(static_cast<std::size_t>(rs.rank()), 0);
    for (char c : w) {
        if (c < 0 || c >= rs.rank()) throw BadIndex("letter out of range");
        ++mu[static_cast<std::size_t>(c)];
    }
    return mu;
}

FreeElt free_generator(int i) { return FreeElt(Letters(1, static_cast<char>(i)), QRat(1)); }

FreeElt free_mul(const FreeElt& a, const FreeElt& b) {
    FreeElt r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) r.add(u + v, cu * cv);
    return r;
}

FreeElt serre_relation(const RootSystem& rs, int i, int j) {
    if (i == j) throw InvalidPair("Serre relation needs i != j");
    if (i < 0 || j < 0 || i >= rs.rank() || j >= rs.rank()) throw BadIndex("simple index out of range");
    const int m = 1 - rs.cartan()[i][j];
    const int d = rs.symmetrizer(i);
    FreeElt r;
    for (int s = 0; s <= m; ++s) {
        Letters w(static_cast<std::size_t>(m - s), static_cast<char>(i));
        w.push_back(static_cast<char>(j));
        w.append(static_cast<std::size_t>(s), static_cast<char>(i));
        QRat c = q_binomial(m, s, d);
        r.add(w, s % 2 ? -c : c);
    }
    return r;
}

struct NFContext::Component {
    std::vector<Letters> basis;
    std::vector<int> offset; // per letter; -1 when mu - alpha_i leaves Q_+
    std::size_t vdim = 0;
    std::vector<int> col_to_basis;
    RowEchelon<QRat> relations{0};
};

NFContext::NFContext(RootSystem rs, int height_bound) : rs_(std::move(rs)), bound_(height_bound) {
    if (bound_ <= 0) bound_ = 2 * rs_.highest_root_height();
}

NFContext::~NFContext() = default;

long NFContext::free_dim(const QVec& mu) const {
    if (!in_positive_cone(mu)) return 0;
    // multinomial coefficient, built up one factor at a time
    long r = 1;
    int n = 0;
    for (int k : mu)
        for (int t = 1; t <= k; ++t) {
            ++n;
            r = r * n / t;
        }
    return r;
}

const NFContext::Component& NFContext::component(const QVec& mu) const {
    std::lock_guard lock(mu_);
    auto it = comps_.find(mu);
    if (it != comps_.end()) return *it->second;
    auto c = build(mu);
    return *comps_.emplace(mu, std::move(c)).first->second;
}

std::unique_ptr<NFContext::Component> NFContext::build(const QVec& mu) const {
    auto comp = std::make_unique<Component>();
    if (!in_positive_cone(mu)) return comp;
    const int h = rs_.height(mu);
    if (h > bound_) throw HeightOverflow("weight " + to_string(mu) + " exceeds height bound " + std::to_string(bound_));
    const int n = rs_.rank();
    if (h == 0) {
        comp->basis.push_back(Letters());
        comp->col_to_basis.push_back(0);
        comp->vdim = 1;
        comp->offset.assign(static_cast<std::size_t>(n), -1);
        return comp;
    }

    std::vector<Letters> cols;
    comp->offset.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        QVec sub = mu - rs_.simple_root(i);
        if (!in_positive_cone(sub)) continue;
        comp->offset[static_cast<std::size_t>(i)] = static_cast<int>(cols.size());
        for (const auto& b : basis(sub)) cols.push_back(Letters(1, static_cast<char>(i)) + b);
    }
    comp->vdim = cols.size();
    comp->relations = RowEchelon<QRat>(comp->vdim);

    auto embed = [&](const Letters& w, const QRat& c, std::vector<QRat>& v) {
        const auto i = static_cast<std::size_t>(w[0]);
        const auto& x = word_coords(w.substr(1));
        const auto off = static_cast<std::size_t>(comp->offset[i]);
        for (std::size_t b = 0; b < x.size(); ++b)
            if (!x[b].is_zero()) v[off + b] += c * x[b];
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FreeElt s = serre_relation(rs_, i, j);
            QVec rest = mu - weight_of(rs_, s.begin()->first);
            if (!in_positive_cone(rest)) continue;
            for (const auto& v : basis(rest)) {
                std::vector<QRat> row(comp->vdim);
                for (const auto& [w, c] : s) embed(w + v, c, row);
                comp->relations.insert(std::move(row));
            }
        }

    comp->col_to_basis.assign(comp->vdim, -1);
    for (std::size_t c = 0; c < comp->vdim; ++c)
        if (!comp->relations.is_pivot(c)) {
            comp->col_to_basis[c] = static_cast<int>(comp->basis.size());
            comp->basis.push_back(cols[c]);
        }
    return comp;
}

const std::vector<Letters>& NFContext::basis(const QVec& mu) const { return component(mu).basis; }

const std::vector<QRat>& NFContext::word_coords(const Letters& w) const {
    std::lock_guard lock(mu_);
    auto it = word_cache_.find(w);
    if (it != word_cache_.end()) return it->second;
    const Component& comp = component(weight_of(rs_, w));
    std::vector<QRat> out(comp.basis.size());
    if (w.empty()) {
        out[0] = QRat(1);
    } else {
        const auto& x = word_coords(w.substr(1));
        std::vector<QRat> v(comp.vdim);
        const auto off = static_cast<std::size_t>(comp.offset[static_cast<std::size_t>(w[0])]);
        for (std::size_t b = 0; b < x.size(); ++b) v[off + b] = x[b];
        v = comp.relations.reduce(std::move(v));
        for (std::size_t c = 0; c < comp.vdim; ++c)
            if (comp.col_to_basis[c] >= 0) out[static_cast<std::size_t>(comp.col_to_basis[c])] = v[c];
    }
    return word_cache_.emplace(w, std::move(out)).first->second;
}

FreeElt NFContext::reduce(const FreeElt& x) const {
    FreeElt r;
    for (const auto& [w, c] : x) {
        const auto& coords = word_coords(w);
        const auto& b = basis(weight_of(rs_, w));
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero()) r.add(b[k], c * coords[k]);
    }
    return r;
}

FreeElt NFContext::mul(const FreeElt& a, const FreeElt& b) const { return reduce(free_mul(a, b)); }

std::map<QVec, std::vector<QRat>> nf_plus(const NFContext& ctx, const FreeElt& x) {
    std::map<QVec, std::vector<QRat>> out;
    for (const auto& [w, c] : x) {
        QVec mu = weight_of(ctx.roots(), w);
        const auto& coords = ctx.word_coords(w);
        auto& slot = out[mu];
        if (slot.empty()) slot.resize(coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k) slot[k] += c * coords[k];
    }
    for (auto it = out.begin(); it != out.end();) {
        bool zero = true;
        for (const auto& v : it->second) zero = zero && v.is_zero();
        it = zero ? out.erase(it) : std::next(it);
    }
    return out;
}

} // namespace qborel
