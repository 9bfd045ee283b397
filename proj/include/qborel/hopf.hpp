#pragma once

// Coproduct on U^{>=0}, the map psi, twisted coideal generators and the
// right-coideal-subalgebra check. Elements of U^{>=0} are UElt values with
// empty F-words (basis K_mu E_e).

#include "qborel/pbw.hpp"
#include "qborel/strata.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace qborel {

using TensorElt = Terms<std::pair<UKey, UKey>>;
using Tensor3 = Terms<std::tuple<UKey, UKey, UKey>>;

TensorElt tensor(const UElt& a, const UElt& b);
TensorElt tensor_mul(const UAlgebra& alg, const TensorElt& a, const TensorElt& b);

/// Delta(E_i) = E_i (x) 1 + K_i (x) E_i, Delta(K) = K (x) K; throws
/// NotInSubalgebra for elements with an F part.
TensorElt coproduct(const UAlgebra& alg, const UElt& x);
QRat counit(const UElt& x);
Tensor3 coproduct_left(const UAlgebra& alg, const TensorElt& x);  // (Delta (x) id)
Tensor3 coproduct_right(const UAlgebra& alg, const TensorElt& x); // (id (x) Delta)

/// psi(x_beta) = q^{-(beta,beta)/2} x_beta K_beta^{-1}, per weight component.
UElt psi(const UAlgebra& alg, const FreeElt& x);
/// Inverse of psi on its image; throws NotInSubalgebra.
FreeElt psi_inverse(const UAlgebra& alg, const UElt& y);

/// (phi psi^{-1} (x) id) Delta(psi(E_{beta_i})) for each i, followed by
/// K_gamma and K_{-gamma} for gamma in the basis of L. Throws InvalidTriple.
std::vector<UElt> twist_generators(const PbwBasis& pbw, const CoidealTriple& t);

struct CoidealReport {
    bool coideal = false;  // left legs of Delta(V) stay in V
    bool graded = false;   // K-homogeneous components of V stay in V
    bool ad_stable = false; // K g K^{-1} in V for grouplike K, generator g
    std::size_t span_dim = 0;
    std::string failure;
    bool ok() const { return coideal && graded && ad_stable; }
};

/// Spans V = K_l * (products of the non-grouplike generators of total degree
/// <= h), l running over 0 and the grouplike generators, and checks
/// Delta(V) in V (x) U^{>=0} together with the K-grading of V. The degree of
/// a generator is the largest height among its E-weights (at least 1);
/// generators of degree above h take no part in the K g K^{-1} test.
/// Grouplike generators enter V only as single prefixes, not through their
/// powers, so a set such as {K_1, E_1} is reported as a non-coideal.
CoidealReport coideal_check_report(const UAlgebra& alg, const std::vector<UElt>& gens, int h);
inline bool coideal_check(const UAlgebra& alg, const std::vector<UElt>& gens, int h) {
    return coideal_check_report(alg, gens, h).ok();
}

} // namespace qborel
