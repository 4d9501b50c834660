#ifndef LRCW_CHERNWEIL_HPP
#define LRCW_CHERNWEIL_HPP

#include "lrcw/coalgebra.hpp"

namespace lrcw {

/// Invariant element of weight k in the polynomial picture: coefficients on
/// monomials in the dual basis of the kernel, with A-values.
struct InvariantPolynomial {
    int weight = 0;
    Vec coeffs;
};

struct CharacteristicClass {
    int weight = 0;
    AltForm representative; // degree 2k, A-valued, a cocycle
    Vec coordinates;        // against the canonical cohomology representatives
};

/// Weight cap forced by the rank of the quotient: images in degree 2k vanish
/// beyond rank/2.
int default_max_weight(const Extension& e);

/// Classifying data of the extension: the weight-k component is an AltForm of
/// degree 2k valued in the weight-k symmetric component, computed as the sum
/// over pair partitions of the arguments (increasing pairs, permutation sign)
/// of the divided-power products of curvature values. Weight 0 is the
/// coaugmentation, weight 1 is the curvature itself.
std::map<int, AltForm> classifying_map(const Extension& e,
                                       const Connection& omega, int w_max);

/// The classifying data is annihilated by the covariant derivative in every
/// weight up to w_max.
bool verify_lemma_3_11(const Extension& e, const Connection& omega, int w_max);

/// phi evaluated (through polarization) on the weight-k classifying
/// component; an A-valued cocycle of degree 2k on the quotient. Throws if phi
/// is not invariant or if the result fails the cocycle check.
AltForm chern_weil_form(const Extension& e, const Connection& omega,
                        const InvariantPolynomial& phi);

/// Class of chern_weil_form against the canonical cohomology representatives
/// of Alt_A(quotient, A); computed with two connections and checked equal.
CharacteristicClass chern_weil_class(const Extension& e,
                                     const InvariantPolynomial& phi);

/// Product of invariants in the polynomial picture, dual to the coproduct.
InvariantPolynomial invariant_poly_product(const Extension& e,
                                           const InvariantPolynomial& p1,
                                           const InvariantPolynomial& p2);

/// chern_weil_form(phi1 . phi2) = chern_weil_form(phi1) ^ chern_weil_form(phi2).
bool multiplicativity_check(const Extension& e, const InvariantPolynomial& p1,
                            const InvariantPolynomial& p2);

/// Classifying data pushed to the coinvariants of the kernel action, with its
/// cocycle property and class coordinates per weight.
struct GlobalInvariant {
    std::map<int, std::size_t> coinvariant_dims;
    std::map<int, AltForm> projected;
    std::map<int, Vec> class_coords;
};

GlobalInvariant global_invariant(const Extension& e, const Connection& omega,
                                 int w_max);

} // namespace lrcw

#endif
