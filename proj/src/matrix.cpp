#include "lrcw/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrcw {

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_)
            throw std::invalid_argument("ragged columns");
        for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return q == 0; });
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] += other.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    return *this + other.scaled(Rational(-1));
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("matrix apply shape mismatch");
    Vec out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

std::size_t Matrix::rank() const { return rref(*this).second.size(); }

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != lead)
            for (std::size_t k = 0; k < a.cols(); ++k)
                std::swap(a.at(sel, k), a.at(lead, k));
        Rational inv = 1 / a.at(lead, c);
        for (std::size_t k = 0; k < a.cols(); ++k) a.at(lead, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (std::size_t k = 0; k < a.cols(); ++k)
                a.at(r, k) -= f * a.at(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {a, pivots};
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = r.at(i, m.cols());
    return x;
}

std::vector<Vec> quotient_basis(std::size_t ambient_dim,
                                const std::vector<Vec>& subspace,
                                const std::vector<Vec>& total_space) {
    for (const auto& v : subspace)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("quotient_basis: subspace vector length");
    for (const auto& v : total_space)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("quotient_basis: total vector length");

    // Containment check: adjoining subspace to total must not raise the rank.
    std::vector<Vec> all = total_space;
    all.insert(all.end(), subspace.begin(), subspace.end());
    std::size_t total_rank = total_space.empty()
                                 ? 0
                                 : Matrix::from_rows(total_space).rank();
    std::size_t joint_rank = all.empty() ? 0 : Matrix::from_rows(all).rank();
    if (joint_rank != total_rank)
        throw std::runtime_error(
            "quotient_basis: subspace not contained in total space");

    std::vector<Vec> current = subspace;
    std::size_t current_rank =
        subspace.empty() ? 0 : Matrix::from_rows(subspace).rank();
    std::vector<Vec> reps;
    for (const auto& v : total_space) {
        std::vector<Vec> trial = current;
        trial.push_back(v);
        std::size_t r = Matrix::from_rows(trial).rank();
        if (r > current_rank) {
            current = std::move(trial);
            current_rank = r;
            reps.push_back(v);
        }
    }
    return reps;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add size");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub size");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const Rational& s, const Vec& a) {
    Vec out = a;
    for (auto& e : out) e *= s;
    return out;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& q) { return q == 0; });
}

} // namespace lrcw
