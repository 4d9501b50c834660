#include "lrcw/algebra.hpp"

#include <stdexcept>

namespace lrcw {

void ValidationReport::merge(const ValidationReport& other,
                             const std::string& prefix) {
    for (const auto& i : other.issues) issues.push_back(prefix + i);
}

CommutativeAlgebra CommutativeAlgebra::rationals() {
    CommutativeAlgebra A;
    A.dim = 1;
    A.basis_labels = {"1"};
    A.mult = {{{Rational(1)}}};
    A.unit = {Rational(1)};
    return A;
}

AElem CommutativeAlgebra::basis_elem(std::size_t i) const {
    AElem v = zero();
    v.at(i) = 1;
    return v;
}

AElem CommutativeAlgebra::multiply(const AElem& a, const AElem& b) const {
    if (a.size() != dim || b.size() != dim)
        throw std::invalid_argument("algebra multiply: coordinate length mismatch");
    AElem out = zero();
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            Rational c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k) out[k] += c * mult[i][j][k];
        }
    }
    return out;
}

Matrix CommutativeAlgebra::mult_matrix(const AElem& a) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        AElem col = multiply(a, basis_elem(j));
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

ValidationReport validate_algebra(const CommutativeAlgebra& A) {
    ValidationReport rep;
    if (A.mult.size() != A.dim)
        rep.add("structure constant table has wrong outer size");
    for (std::size_t i = 0; i < A.mult.size(); ++i) {
        if (A.mult[i].size() != A.dim)
            rep.add("structure constant row " + std::to_string(i) + " has wrong size");
        for (std::size_t j = 0; j < A.mult[i].size(); ++j)
            if (A.mult[i][j].size() != A.dim)
                rep.add("structure constant entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") has wrong length");
    }
    if (A.unit.size() != A.dim) rep.add("unit vector has wrong length");
    if (!rep.ok()) return rep;

    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = i + 1; j < A.dim; ++j)
            if (A.mult[i][j] != A.mult[j][i])
                rep.add("commutativity fails at basis pair (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            for (std::size_t l = 0; l < A.dim; ++l) {
                AElem lhs = A.multiply(A.mult[i][j], A.basis_elem(l));
                AElem rhs = A.multiply(A.basis_elem(i), A.mult[j][l]);
                if (lhs != rhs)
                    rep.add("associativity fails at basis triple (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(l) + ")");
            }
    for (std::size_t i = 0; i < A.dim; ++i)
        if (A.multiply(A.unit, A.basis_elem(i)) != A.basis_elem(i))
            rep.add("unit law fails at basis element " + std::to_string(i));
    return rep;
}

std::pair<bool, std::string> is_derivation(const CommutativeAlgebra& A,
                                           const Matrix& d) {
    if (d.rows() != A.dim || d.cols() != A.dim)
        throw std::invalid_argument("is_derivation: matrix shape mismatch");
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec lhs = d.apply(A.mult[i][j]);
            Vec rhs = vec_add(A.multiply(d.apply(A.basis_elem(i)), A.basis_elem(j)),
                              A.multiply(A.basis_elem(i), d.apply(A.basis_elem(j))));
            if (lhs != rhs)
                return {false, "Leibniz fails at basis pair (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")"};
        }
    return {true, ""};
}

std::vector<Derivation> derivations_basis(const CommutativeAlgebra& A) {
    const std::size_t n = A.dim;
    // Unknowns: entries D[k][j], flattened as k*n + j.
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n * n, Rational(0));
                // (D . mult[i][j])_k
                for (std::size_t l = 0; l < n; ++l)
                    row[k * n + l] += A.mult[i][j][l];
                // - (mult_matrix(e_j) . D e_i)_k  - (mult_matrix(e_i) . D e_j)_k
                Matrix mj = A.mult_matrix(A.basis_elem(j));
                Matrix mi = A.mult_matrix(A.basis_elem(i));
                for (std::size_t l = 0; l < n; ++l) {
                    row[l * n + i] -= mj.at(k, l);
                    row[l * n + j] -= mi.at(k, l);
                }
                rows.push_back(std::move(row));
            }
    std::vector<Derivation> basis;
    for (const auto& v : kernel_basis(Matrix::from_rows(rows))) {
        Matrix d(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) d.at(k, j) = v[k * n + j];
        basis.push_back({std::move(d)});
    }
    return basis;
}

} // namespace lrcw
