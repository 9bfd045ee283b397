#pragma once

// Finite root systems from Cartan data, the invariant form, and integer
// sublattices of the root lattice.

#include "qborel/coeffs.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qborel {

/// Element of the root lattice Q in simple-root coordinates.
using QVec = std::vector<int>;

using IntMatrix = std::vector<std::vector<int>>;

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(int c, const QVec& a);
bool is_zero(const QVec& v);
bool in_positive_cone(const QVec& v); // all coordinates >= 0
std::string to_string(const QVec& v);

/// Cartan convention: a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i), so the
/// row index belongs to the coroot and gram = diag(d) * A.
class RootSystem {
public:
    /// "A3", "B2", "G2", "D4", "A1xA1", ...  B2 has alpha_1 short; higher B_n,
    /// C_n, F4 and E_n follow Bourbaki numbering; G2 has alpha_1 short.
    static RootSystem from_type(const std::string& type);
    static RootSystem from_cartan(const IntMatrix& cartan, std::string label = "custom");

    int rank() const { return rank_; }
    const std::string& label() const { return label_; }
    const IntMatrix& cartan() const { return cartan_; }
    const IntMatrix& gram() const { return gram_; }
    int symmetrizer(int i) const { return d_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& symmetrizers() const { return d_; }

    /// Positive roots ordered by height, then lexicographically.
    const std::vector<QVec>& positive_roots() const { return *pos_roots_; }
    std::shared_ptr<const std::vector<QVec>> positive_roots_ptr() const { return pos_roots_; }
    std::optional<int> root_index(const QVec& v) const;
    bool is_positive_root(const QVec& v) const { return root_index(v).has_value(); }
    bool is_root(const QVec& v) const;
    QVec simple_root(int i) const;

    long bilinear(const QVec& x, const QVec& y) const;
    /// Pairing of a root-lattice vector with a rational weight given in
    /// simple-root coordinates.
    Rat bilinear(const QVec& x, const std::vector<Rat>& lambda) const;
    /// <x, alpha_i^vee> = 2(x, alpha_i) / (alpha_i, alpha_i)
    int coroot_pairing(const QVec& x, int i) const;
    QVec simple_reflect(int i, const QVec& x) const;
    /// s_beta(x) for a positive root beta.
    QVec reflect(const QVec& beta, const QVec& x) const;
    int height(const QVec& x) const; // throws NotInPositiveCone
    int highest_root_height() const { return height(pos_roots_->back()); }

    /// rho = half sum of positive roots, in simple-root coordinates.
    std::vector<Rat> rho() const;
    /// Fundamental weight omega_i in simple-root coordinates.
    std::vector<Rat> fundamental_weight(int i) const;

private:
    int rank_ = 0;
    std::string label_;
    IntMatrix cartan_;
    IntMatrix gram_;
    std::vector<int> d_;
    std::shared_ptr<const std::vector<QVec>> pos_roots_;
};

/// Subgroup of Q stored by its row-style Hermite normal form (positive
/// pivots, entries above a pivot reduced into [0, pivot)). The canonical
/// form makes equality structural.
class Lattice {
public:
    Lattice() = default;
    static Lattice from_generators(int dim, const std::vector<QVec>& gens);
    static Lattice full(int dim);
    static Lattice zero(int dim) { return from_generators(dim, {}); }

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVec>& basis() const { return basis_; }
    bool contains(const QVec& v) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    int dim_ = 0;
    std::vector<QVec> basis_;
};

/// Row Hermite normal form of an integer matrix; zero rows are dropped.
std::vector<QVec> hermite_normal_form(std::vector<QVec> rows, int ncols);

/// {gamma in Q : (gamma, s) = 0 for all s in S}
Lattice orthogonal_complement_lattice(const RootSystem& rs, const std::vector<QVec>& S);
bool lattice_leq(const Lattice& a, const Lattice& b);

/// Number of ways to write mu as an N_0-combination of positive roots.
long kostant_partition_count(const RootSystem& rs, const QVec& mu);

} // namespace qborel
