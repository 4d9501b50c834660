#ifndef LRCW_MATRIX_HPP
#define LRCW_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lrcw/rational.hpp"

namespace lrcw {

/// Dense rational matrix, row-major. All operations are exact and
/// deterministic; canonical forms (RREF, pivot-first solutions) are unique,
/// so downstream golden-output tests are bit-stable.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    Matrix(std::size_t rows, std::size_t cols, Vec entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_cols(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const Vec& entries() const { return entries_; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Rational& s) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;

    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    Vec entries_;
};

/// Reduced row echelon form together with the pivot column indices.
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

/// Canonical null-space basis: one vector per non-pivot column, the free
/// coordinate set to 1, ordered by free-column index.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Particular solution of m x = b with non-pivot coordinates zero, or
/// nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Representatives of total/sub: extends the RREF basis of `subspace` to one
/// of span(total_space) by greedily adding total_space vectors, and returns
/// the added vectors. Throws if subspace is not contained in span(total_space),
/// which upstream signals a differential that does not square to zero.
std::vector<Vec> quotient_basis(std::size_t ambient_dim,
                                const std::vector<Vec>& subspace,
                                const std::vector<Vec>& total_space);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& a);
bool vec_is_zero(const Vec& v);

} // namespace lrcw

#endif
