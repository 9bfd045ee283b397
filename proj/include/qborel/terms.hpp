#pragma once

// Sparse linear combinations with Q(q) coefficients over an ordered key set.

#include "qborel/coeffs.hpp"

#include <map>

namespace qborel {

template <class Key>
class Terms {
public:
    using Map = std::map<Key, QRat>;

    Terms() = default;
    Terms(const Key& k, const QRat& c) { add(k, c); }

    bool is_zero() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    const Map& map() const { return map_; }
    auto begin() const { return map_.begin(); }
    auto end() const { return map_.end(); }

    QRat coeff(const Key& k) const {
        auto it = map_.find(k);
        return it == map_.end() ? QRat() : it->second;
    }

    void add(const Key& k, const QRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = map_.try_emplace(k, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) map_.erase(it);
    }

    void add_scaled(const Terms& o, const QRat& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.map_) add(k, v * c);
    }

    Terms scaled(const QRat& c) const {
        Terms r;
        r.add_scaled(*this, c);
        return r;
    }

    Terms& operator+=(const Terms& o) {
        for (const auto& [k, v] : o.map_) add(k, v);
        return *this;
    }
    Terms& operator-=(const Terms& o) {
        for (const auto& [k, v] : o.map_) add(k, -v);
        return *this;
    }
    friend Terms operator+(Terms a, const Terms& b) { return a += b; }
    friend Terms operator-(Terms a, const Terms& b) { return a -= b; }
    Terms operator-() const { return scaled(QRat(-1)); }

    friend bool operator==(const Terms&, const Terms&) = default;

private:
    Map map_;
};

} // namespace qborel
