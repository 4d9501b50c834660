#ifndef LRCW_ALGEBRA_HPP
#define LRCW_ALGEBRA_HPP

#include <string>
#include <vector>

#include "lrcw/matrix.hpp"

namespace lrcw {

/// Collects all axiom violations instead of failing fast, so the CLI can
/// report every witness at once.
struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    void add(std::string msg) { issues.push_back(std::move(msg)); }
    void merge(const ValidationReport& other, const std::string& prefix);
};

// Elements of A are coordinate vectors in the fixed basis.
using AElem = Vec;

/// Finite-dimensional commutative unital algebra over the rationals,
/// presented by structure constants: e_i e_j = sum_k mult[i][j][k] e_k.
struct CommutativeAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<AElem>> mult; // mult[i][j] = coords of e_i e_j
    AElem unit;                           // coords of 1

    static CommutativeAlgebra rationals();

    AElem zero() const { return AElem(dim, Rational(0)); }
    AElem basis_elem(std::size_t i) const;

    AElem multiply(const AElem& a, const AElem& b) const;

    /// Left-multiplication by `a` as a dim x dim matrix (regular representation).
    Matrix mult_matrix(const AElem& a) const;

    bool operator==(const CommutativeAlgebra& other) const = default;
};

/// Derivation of A as a matrix acting on basis coordinates.
struct Derivation {
    Matrix matrix;
};

ValidationReport validate_algebra(const CommutativeAlgebra& A);

/// Leibniz check on all basis pairs; on failure names the violating pair.
std::pair<bool, std::string> is_derivation(const CommutativeAlgebra& A,
                                           const Matrix& d);

/// Canonical basis of Der(A), obtained as the kernel of the Leibniz linear
/// system on matrix entries.
std::vector<Derivation> derivations_basis(const CommutativeAlgebra& A);

} // namespace lrcw

#endif
