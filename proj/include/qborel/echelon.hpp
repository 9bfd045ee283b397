#pragma once

// Incremental row echelon form over a field. Each stored row is reduced
// against the rows inserted before it, so a single forward pass clears
// every pivot column. The pivot of a row is its last nonzero column.

#include <cstddef>
#include <optional>
#include <vector>

namespace qborel {

template <class F>
class RowEchelon {
public:
    /// With `track` set, every stored row remembers its expression in the
    /// inserted vectors, which makes solve() available.
    explicit RowEchelon(std::size_t ncols, bool track = false) : ncols_(ncols), track_(track) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_pivot(std::size_t c) const {
        for (auto p : pivots_)
            if (p == c) return true;
        return false;
    }

    /// Returns true if v was independent of the rows already present.
    bool insert(std::vector<F> v) {
        std::vector<F> combo;
        if (track_) {
            combo.assign(inserted_ + 1, F());
            combo[inserted_] = F(1);
        }
        ++inserted_;
        for (auto& c : combos_) c.resize(inserted_, F());
        eliminate(v, track_ ? &combo : nullptr);
        std::size_t p = ncols_;
        for (std::size_t c = ncols_; c-- > 0;)
            if (!(v[c] == F())) {
                p = c;
                break;
            }
        if (p == ncols_) return false;
        F inv = F(1) / v[p];
        for (auto& x : v) x *= inv;
        if (track_)
            for (auto& x : combo) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        if (track_) combos_.push_back(std::move(combo));
        return true;
    }

    /// Remainder of v modulo the row space; zero in every pivot column.
    std::vector<F> reduce(std::vector<F> v) const {
        eliminate(v, nullptr);
        return v;
    }

    bool in_span(const std::vector<F>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!(x == F())) return false;
        return true;
    }

    /// Coefficients c with v = sum_k c_k * (k-th inserted vector), if v lies
    /// in the span. Requires tracking.
    std::optional<std::vector<F>> solve(std::vector<F> v) const {
        std::vector<F> combo(inserted_, F());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            F c = v[pivots_[r]];
            if (c == F()) continue;
            for (std::size_t k = 0; k < ncols_; ++k)
                if (!(rows_[r][k] == F())) v[k] -= c * rows_[r][k];
            for (std::size_t k = 0; k < inserted_; ++k)
                if (!(combos_[r][k] == F())) combo[k] += c * combos_[r][k];
        }
        for (const auto& x : v)
            if (!(x == F())) return std::nullopt;
        return combo;
    }

private:
    void eliminate(std::vector<F>& v, std::vector<F>* combo) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            F c = v[pivots_[r]];
            if (c == F()) continue;
            for (std::size_t k = 0; k < ncols_; ++k)
                if (!(rows_[r][k] == F())) v[k] -= c * rows_[r][k];
            if (combo)
                for (std::size_t k = 0; k < combos_[r].size(); ++k)
                    if (!(combos_[r][k] == F())) (*combo)[k] -= c * combos_[r][k];
        }
    }

    std::size_t ncols_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<F>> combos_;
};

} // namespace qborel
