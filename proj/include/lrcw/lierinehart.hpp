#ifndef LRCW_LIERINEHART_HPP
#define LRCW_LIERINEHART_HPP

#include <string>
#include <vector>

#include "lrcw/algebra.hpp"

namespace lrcw {

// An element of L is a vector of A-coefficients over the chosen L-basis.
using LElem = std::vector<AElem>;

/// Lie-Rinehart algebra: a free A-module with basis e_1..e_rank, bracket
/// structure functions with coefficients in A, and an anchor sending each
/// basis element to a derivation of A. Brackets and anchors of general
/// elements are derived from the compatibility axioms.
struct LieRinehartAlgebra {
    CommutativeAlgebra base;
    std::size_t rank = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<LElem>> bracket; // bracket[i][j] = [e_i, e_j]
    std::vector<Matrix> anchor;              // anchor[i] acts on A-coordinates

    std::size_t qdim() const { return rank * base.dim; }

    LElem zero_elem() const;
    LElem basis_elem(std::size_t i) const;

    Vec flatten(const LElem& x) const;
    LElem unflatten(const Vec& v) const;

    /// Extended bracket: [a e_i, b e_j] = ab [e_i,e_j] + a e_i(b) e_j - b e_j(a) e_i.
    LElem bracket_of(const LElem& x, const LElem& y) const;

    /// Extended anchor of a general element, as a matrix on A-coordinates.
    Matrix anchor_matrix(const LElem& x) const;

    bool operator==(const LieRinehartAlgebra& other) const = default;
};

/// (A,L)-module given by matrices on a finite-dimensional rational space.
struct LRModule {
    std::size_t qdim = 0;
    std::vector<Matrix> a_action; // per A-basis element
    std::vector<Matrix> l_action; // per L-basis element

    Matrix act_a(const CommutativeAlgebra& A, const AElem& a) const;
    /// Extended action of a general L-element, via (a alpha)(m) = a (alpha(m)).
    Matrix act_l(const CommutativeAlgebra& A, const LElem& x) const;
};

ValidationReport validate_lra(const LieRinehartAlgebra& L);
ValidationReport validate_module(const LieRinehartAlgebra& L, const LRModule& M);

/// The trivial one-dimensional module (A acts through the unit coordinate,
/// L acts by zero). Valid when every anchor kills the unit's span; used for
/// classical Lie-algebra cohomology over A = Q.
LRModule trivial_module(const LieRinehartAlgebra& L);

/// M = A with L acting through the anchor.
LRModule anchor_module(const LieRinehartAlgebra& L);

} // namespace lrcw

#endif
