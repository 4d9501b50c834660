#include "lrcw/coalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrcw {

namespace {

std::vector<int> to_counts(std::size_t rank, const Multiset& m) {
    std::vector<int> c(rank, 0);
    for (int j : m) ++c[j];
    return c;
}

Multiset from_counts(const std::vector<int>& c) {
    Multiset m;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int r = 0; r < c[j]; ++r) m.push_back(static_cast<int>(j));
    return m;
}

// all count vectors s with 0 <= s_c <= c_c and sum s = u
void enumerate_sub(const std::vector<int>& c, int u, std::size_t pos,
                   std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (pos == c.size()) {
        if (u == 0) out.push_back(cur);
        return;
    }
    for (int take = 0; take <= std::min(c[pos], u); ++take) {
        cur[pos] = take;
        enumerate_sub(c, u - take, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

Rational factorial_product(const std::vector<int>& c) {
    Rational out(1);
    for (int n : c)
        for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace

std::vector<Multiset> sym_basis(std::size_t rank, int k) {
    std::vector<Multiset> out;
    Multiset cur;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j < static_cast<int>(rank); ++j) {
            cur.push_back(j);
            self(self, j, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

std::size_t sym_index(std::size_t rank, const Multiset& m) {
    auto basis = sym_basis(rank, static_cast<int>(m.size()));
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
        throw std::invalid_argument("sym_index: not a valid multiset label");
    return static_cast<std::size_t>(it - basis.begin());
}

std::size_t sym_dim(const CommutativeAlgebra& A, std::size_t rank, int k) {
    return sym_basis(rank, k).size() * A.dim;
}

Matrix diagonal_component(const CommutativeAlgebra& A, std::size_t rank, int k,
                          int u) {
    int v = k - u;
    auto bk = sym_basis(rank, k);
    auto bu = sym_basis(rank, u);
    auto bv = sym_basis(rank, v);
    Matrix out(bu.size() * bv.size() * A.dim, bk.size() * A.dim);
    for (std::size_t im = 0; im < bk.size(); ++im) {
        auto c = to_counts(rank, bk[im]);
        std::vector<std::vector<int>> subs;
        std::vector<int> cur(rank, 0);
        enumerate_sub(c, u, 0, cur, subs);
        for (const auto& s : subs) {
            std::vector<int> rest(rank);
            for (std::size_t j = 0; j < rank; ++j) rest[j] = c[j] - s[j];
            std::size_t i1 = sym_index(rank, from_counts(s));
            std::size_t i2 = sym_index(rank, from_counts(rest));
            for (std::size_t a = 0; a < A.dim; ++a)
                out.at((i1 * bv.size() + i2) * A.dim + a, im * A.dim + a) += 1;
        }
    }
    return out;
}

Vec sym_mult_by_linear(const CommutativeAlgebra& A, std::size_t rank, int u,
                       const Vec& x, const Vec& y) {
    auto bu = sym_basis(rank, u);
    auto bt = sym_basis(rank, u + 1);
    Vec out(bt.size() * A.dim, Rational(0));
    for (std::size_t im = 0; im < bu.size(); ++im) {
        AElem xm(x.begin() + im * A.dim, x.begin() + (im + 1) * A.dim);
        if (vec_is_zero(xm)) continue;
        auto c = to_counts(rank, bu[im]);
        for (std::size_t j = 0; j < rank; ++j) {
            AElem yj(y.begin() + j * A.dim, y.begin() + (j + 1) * A.dim);
            if (vec_is_zero(yj)) continue;
            auto ct = c;
            ++ct[j];
            std::size_t it = sym_index(rank, from_counts(ct));
            AElem prod = A.multiply(xm, yj);
            for (std::size_t a = 0; a < A.dim; ++a)
                out[it * A.dim + a] += Rational(ct[j]) * prod[a];
        }
    }
    return out;
}

Matrix coalgebra_action(const Extension& e, std::size_t i, int k) {
    const auto& A = e.base();
    const std::size_t rank = e.kernel.rank;
    auto bk = sym_basis(rank, k);
    const std::size_t dim = bk.size() * A.dim;
    Matrix out(dim, dim);

    // adjoint action of e_i on the kernel basis, with A-coefficients
    std::vector<LElem> ad(rank);
    for (std::size_t j = 0; j < rank; ++j)
        ad[j] = retract(e, e.total.bracket_of(
                               e.total.basis_elem(i),
                               amat_apply(A, e.incl, e.kernel.basis_elem(j))));

    const Matrix& anchor = e.total.anchor[i];
    for (std::size_t im = 0; im < bk.size(); ++im) {
        auto c = to_counts(rank, bk[im]);
        for (std::size_t a = 0; a < A.dim; ++a) {
            std::size_t col = im * A.dim + a;
            // anchor on the A-coefficient
            for (std::size_t r = 0; r < A.dim; ++r)
                out.at(im * A.dim + r, col) += anchor.at(r, a);
            // derivation on the monomial
            for (std::size_t j = 0; j < rank; ++j) {
                if (c[j] == 0) continue;
                auto cm = c;
                --cm[j];
                for (std::size_t t = 0; t < rank; ++t) {
                    if (vec_is_zero(ad[j][t])) continue;
                    auto ct = cm;
                    ++ct[t];
                    std::size_t it = sym_index(rank, from_counts(ct));
                    AElem coeff = A.multiply(A.basis_elem(a), ad[j][t]);
                    Rational mult(ct[t]);
                    for (std::size_t r = 0; r < A.dim; ++r)
                        out.at(it * A.dim + r, col) += mult * coeff[r];
                }
            }
        }
    }
    return out;
}

LRModule sym_module(const Extension& e, int k) {
    const auto& A = e.base();
    const std::size_t nB = sym_basis(e.kernel.rank, k).size();
    LRModule M;
    M.qdim = nB * A.dim;
    for (std::size_t a = 0; a < A.dim; ++a) {
        Matrix block = A.mult_matrix(A.basis_elem(a));
        Matrix m(M.qdim, M.qdim);
        for (std::size_t s = 0; s < nB; ++s)
            for (std::size_t r = 0; r < A.dim; ++r)
                for (std::size_t c = 0; c < A.dim; ++c)
                    m.at(s * A.dim + r, s * A.dim + c) = block.at(r, c);
        M.a_action.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < e.total.rank; ++i)
        M.l_action.push_back(coalgebra_action(e, i, k));
    return M;
}

Vec functional_eval(const CommutativeAlgebra& A, std::size_t rank, int k,
                    const Vec& zeta, const Vec& x) {
    const std::size_t nB = sym_basis(rank, k).size();
    Vec out(A.dim, Rational(0));
    for (std::size_t im = 0; im < nB; ++im) {
        AElem xm(x.begin() + im * A.dim, x.begin() + (im + 1) * A.dim);
        if (vec_is_zero(xm)) continue;
        AElem zm(zeta.begin() + im * A.dim, zeta.begin() + (im + 1) * A.dim);
        out = vec_add(out, A.multiply(xm, zm));
    }
    return out;
}

Vec dual_action(const Extension& e, std::size_t i, int k, const Vec& zeta) {
    const auto& A = e.base();
    const std::size_t rank = e.kernel.rank;
    const std::size_t nB = sym_basis(rank, k).size();
    Matrix act = coalgebra_action(e, i, k);
    Vec out(nB * A.dim, Rational(0));
    for (std::size_t im = 0; im < nB; ++im) {
        // gamma_m with unit A-coefficient
        Vec basis_vec(nB * A.dim, Rational(0));
        for (std::size_t a = 0; a < A.dim; ++a)
            basis_vec[im * A.dim + a] = A.unit[a];
        AElem zm(zeta.begin() + im * A.dim, zeta.begin() + (im + 1) * A.dim);
        Vec value = e.total.anchor[i].apply(zm);
        value = vec_sub(value, functional_eval(A, rank, k, zeta,
                                               act.apply(basis_vec)));
        for (std::size_t a = 0; a < A.dim; ++a) out[im * A.dim + a] = value[a];
    }
    return out;
}

std::vector<Vec> invariants(const Extension& e, int k) {
    const auto& A = e.base();
    const std::size_t dim = sym_dim(A, e.kernel.rank, k);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < e.total.rank; ++i) {
        Matrix m(dim, dim);
        for (std::size_t col = 0; col < dim; ++col) {
            Vec unit(dim, Rational(0));
            unit[col] = 1;
            Vec img = dual_action(e, i, k, unit);
            for (std::size_t r = 0; r < dim; ++r) m.at(r, col) = img[r];
        }
        for (std::size_t r = 0; r < dim; ++r) rows.push_back(m.row(r));
    }
    if (rows.empty()) {
        std::vector<Vec> out;
        for (std::size_t c = 0; c < dim; ++c) {
            Vec v(dim, Rational(0));
            v[c] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }
    return kernel_basis(Matrix::from_rows(rows));
}

Vec polarize(const CommutativeAlgebra& A, std::size_t rank, int k,
             const Vec& p) {
    auto bk = sym_basis(rank, k);
    Vec out = p;
    for (std::size_t im = 0; im < bk.size(); ++im) {
        Rational f = factorial_product(to_counts(rank, bk[im]));
        for (std::size_t a = 0; a < A.dim; ++a) out[im * A.dim + a] *= f;
    }
    return out;
}

Vec unpolarize(const CommutativeAlgebra& A, std::size_t rank, int k,
               const Vec& zeta) {
    auto bk = sym_basis(rank, k);
    Vec out = zeta;
    for (std::size_t im = 0; im < bk.size(); ++im) {
        Rational f = factorial_product(to_counts(rank, bk[im]));
        for (std::size_t a = 0; a < A.dim; ++a) out[im * A.dim + a] /= f;
    }
    return out;
}

Vec invariant_product(const CommutativeAlgebra& A, std::size_t rank, int k1,
                      int k2, const Vec& z1, const Vec& z2) {
    auto bt = sym_basis(rank, k1 + k2);
    Vec out(bt.size() * A.dim, Rational(0));
    for (std::size_t im = 0; im < bt.size(); ++im) {
        auto c = to_counts(rank, bt[im]);
        std::vector<std::vector<int>> subs;
        std::vector<int> cur(rank, 0);
        enumerate_sub(c, k1, 0, cur, subs);
        AElem value = A.zero();
        for (const auto& s : subs) {
            std::vector<int> rest(rank);
            for (std::size_t j = 0; j < rank; ++j) rest[j] = c[j] - s[j];
            std::size_t i1 = sym_index(rank, from_counts(s));
            std::size_t i2 = sym_index(rank, from_counts(rest));
            AElem a1(z1.begin() + i1 * A.dim, z1.begin() + (i1 + 1) * A.dim);
            AElem a2(z2.begin() + i2 * A.dim, z2.begin() + (i2 + 1) * A.dim);
            value = vec_add(value, A.multiply(a1, a2));
        }
        for (std::size_t a = 0; a < A.dim; ++a) out[im * A.dim + a] = value[a];
    }
    return out;
}

bool coalgebra_morphism_check(const Extension& e,
                              const std::map<int, AltForm>& F, int w_max) {
    const auto& A = e.base();
    const std::size_t rank = e.kernel.rank;
    const std::size_t qrank = e.quotient.rank;

    auto component = [&](int k, const Tuple& t) -> Vec {
        std::size_t dim = sym_dim(A, rank, k);
        auto it = F.find(k);
        if (it == F.end()) return Vec(dim, Rational(0));
        Vec v = it->second.get(t);
        if (v.size() != dim) throw std::invalid_argument("bad component size");
        return v;
    };

    // counit: the weight-0 component must be the coaugmentation
    if (component(0, {}) != A.unit) return false;

    for (int k = 2; k <= w_max; ++k) {
        for (int u = 1; u < k; ++u) {
            int v = k - u;
            std::size_t nBu = sym_basis(rank, u).size();
            std::size_t nBv = sym_basis(rank, v).size();
            Matrix delta = diagonal_component(A, rank, k, u);
            for (const auto& T : alt_tuples(qrank, 2 * k)) {
                Vec lhs = delta.apply(component(k, T));
                Vec rhs(nBu * nBv * A.dim, Rational(0));
                // subsets of positions of size 2u, shuffle-signed
                std::vector<int> pos(2 * u);
                for (int i = 0; i < 2 * u; ++i) pos[i] = i;
                bool more = true;
                while (more) {
                    Tuple left, right;
                    std::size_t pi = 0;
                    for (int i = 0; i < 2 * k; ++i) {
                        if (pi < pos.size() && pos[pi] == i) {
                            left.push_back(T[i]);
                            ++pi;
                        } else {
                            right.push_back(T[i]);
                        }
                    }
                    int sign = shuffle_sign(pos, 2 * k);
                    Vec xu = component(u, left);
                    Vec xv = component(v, right);
                    for (std::size_t i1 = 0; i1 < nBu; ++i1) {
                        AElem a1(xu.begin() + i1 * A.dim,
                                 xu.begin() + (i1 + 1) * A.dim);
                        if (vec_is_zero(a1)) continue;
                        for (std::size_t i2 = 0; i2 < nBv; ++i2) {
                            AElem a2(xv.begin() + i2 * A.dim,
                                     xv.begin() + (i2 + 1) * A.dim);
                            if (vec_is_zero(a2)) continue;
                            AElem prod = A.multiply(a1, a2);
                            for (std::size_t a = 0; a < A.dim; ++a)
                                rhs[(i1 * nBv + i2) * A.dim + a] +=
                                    Rational(sign) * prod[a];
                        }
                    }
                    // next subset
                    int i = static_cast<int>(pos.size()) - 1;
                    while (i >= 0 &&
                           pos[i] == 2 * k - static_cast<int>(pos.size()) + i)
                        --i;
                    if (i < 0) {
                        more = false;
                    } else {
                        ++pos[i];
                        for (std::size_t j2 = i + 1; j2 < pos.size(); ++j2)
                            pos[j2] = pos[j2 - 1] + 1;
                    }
                }
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

} // namespace lrcw
