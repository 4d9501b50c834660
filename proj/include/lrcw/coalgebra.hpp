#ifndef LRCW_COALGEBRA_HPP
#define LRCW_COALGEBRA_HPP

#include "lrcw/extension.hpp"

namespace lrcw {

// Weakly increasing tuple of kernel basis indices; a multiset label for a
// divided-power monomial gamma_{m_1} xi_1 ... gamma_{m_r} xi_r.
using Multiset = std::vector<int>;

/// All multisets of size k over {0..rank-1}, lexicographically ordered. The
/// weight-k component of the symmetric coalgebra is the free A-module on
/// these labels; flat coordinates are (monomial, A-basis) pairs, A fastest.
std::vector<Multiset> sym_basis(std::size_t rank, int k);

std::size_t sym_index(std::size_t rank, const Multiset& m);

/// Rational dimension of the weight-k component.
std::size_t sym_dim(const CommutativeAlgebra& A, std::size_t rank, int k);

/// The (u, k-u) component of the coproduct as a matrix from weight-k flat
/// coordinates to (weight-u tensor_A weight-(k-u)) flat coordinates, pair
/// (i, j) flattened as (i * nB_v + j) * dimA + a. On divided powers the
/// coefficient of gamma_{m1} (x) gamma_{m \ m1} is 1 for every distinct
/// submultiset m1 of size u.
Matrix diagonal_component(const CommutativeAlgebra& A, std::size_t rank, int k,
                          int u);

/// Product of a weight-u element with a weight-1 element in the divided-power
/// algebra: gamma_m * xi_j = (m_j + 1) gamma_{m + j}, A-bilinear.
Vec sym_mult_by_linear(const CommutativeAlgebra& A, std::size_t rank, int u,
                       const Vec& x, const Vec& y);

/// Coderivation action of the total-algebra basis element e_i on the weight-k
/// component: the anchor on A-coefficients plus the adjoint action on the
/// kernel extended as a derivation of divided powers.
Matrix coalgebra_action(const Extension& e, std::size_t i, int k);

/// Weight-k component as an (A, total)-module: a_action multiplies the
/// A-coefficients, l_action is coalgebra_action. This packages the
/// coderivation structure so that the generic differential machinery applies.
LRModule sym_module(const Extension& e, int k);

/// A-valued functionals on the weight-k component, stored by their values on
/// the gamma-monomial basis (same flat shape as elements).
Vec functional_eval(const CommutativeAlgebra& A, std::size_t rank, int k,
                    const Vec& zeta, const Vec& x);

/// (alpha zeta)(x) = anchor_alpha(zeta(x)) - zeta(alpha x), for the
/// total-algebra basis element e_i.
Vec dual_action(const Extension& e, std::size_t i, int k, const Vec& zeta);

/// Canonical basis of the weight-k functionals killed by dual_action of every
/// total-algebra basis element.
std::vector<Vec> invariants(const Extension& e, int k);

/// Polynomial picture: coefficients on the same multiset labels, read as
/// monomials in the dual basis. polarize sends the monomial xi^m to the
/// functional with value prod_j (m_j)! on gamma_m; a bijection over Q.
Vec polarize(const CommutativeAlgebra& A, std::size_t rank, int k, const Vec& p);
Vec unpolarize(const CommutativeAlgebra& A, std::size_t rank, int k,
               const Vec& zeta);

/// Product of functionals dual to the coproduct:
/// (z1 z2)(gamma_m) = sum over size-k1 submultisets m1 of z1(gamma_m1) z2(gamma_{m-m1}).
Vec invariant_product(const CommutativeAlgebra& A, std::size_t rank, int k1,
                      int k2, const Vec& z1, const Vec& z2);

/// Checks that the weight-graded map F (exterior side on the quotient to
/// symmetric side on the kernel, F[k] an AltForm of degree 2k valued in
/// weight-k flat coordinates) is a morphism of coalgebras through weight
/// w_max: counit compatibility and Delta F = (F (x) F) Delta, where the
/// exterior coproduct carries shuffle signs.
bool coalgebra_morphism_check(const Extension& e,
                              const std::map<int, AltForm>& F, int w_max);

} // namespace lrcw

#endif
