#include "lrcw/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrcw {

LElem amat_apply(const CommutativeAlgebra& A, const AMat& f, const LElem& x) {
    LElem out(f.size(), A.zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!vec_is_zero(x[j]))
                out[i] = vec_add(out[i], A.multiply(f[i][j], x[j]));
    return out;
}

Matrix amat_to_q(const CommutativeAlgebra& A, const AMat& f, std::size_t rows,
                 std::size_t cols) {
    Matrix out(rows * A.dim, cols * A.dim);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix block = A.mult_matrix(f[i][j]);
            for (std::size_t r = 0; r < A.dim; ++r)
                for (std::size_t c = 0; c < A.dim; ++c)
                    out.at(i * A.dim + r, j * A.dim + c) = block.at(r, c);
        }
    return out;
}

AMat amat_compose(const CommutativeAlgebra& A, const AMat& f, const AMat& g) {
    std::size_t rows = f.size(), mid = g.size(), cols = g.empty() ? 0 : g[0].size();
    AMat out(rows, std::vector<AElem>(cols, A.zero()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < mid; ++k)
                out[i][j] = vec_add(out[i][j], A.multiply(f[i][k], g[k][j]));
    return out;
}

namespace {

LElem omega_column(const Extension& e, const Connection& omega, std::size_t a) {
    LElem out = e.total.zero_elem();
    for (std::size_t i = 0; i < e.total.rank; ++i) out[i] = omega.omega[i][a];
    return out;
}

AMat zero_amat(const CommutativeAlgebra& A, std::size_t rows, std::size_t cols) {
    return AMat(rows, std::vector<AElem>(cols, A.zero()));
}

bool kernel_is_abelian(const Extension& e) {
    for (const auto& row : e.kernel.bracket)
        for (const auto& entry : row)
            for (const auto& coeff : entry)
                if (!vec_is_zero(coeff)) return false;
    return true;
}

// A acting on flattened kernel coordinates, one matrix per A-basis element.
std::vector<Matrix> kernel_a_action(const LieRinehartAlgebra& kernel) {
    const auto& A = kernel.base;
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < A.dim; ++a) {
        Matrix block = A.mult_matrix(A.basis_elem(a));
        Matrix m(kernel.qdim(), kernel.qdim());
        for (std::size_t s = 0; s < kernel.rank; ++s)
            for (std::size_t r = 0; r < A.dim; ++r)
                for (std::size_t c = 0; c < A.dim; ++c)
                    m.at(s * A.dim + r, s * A.dim + c) = block.at(r, c);
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

ValidationReport validate_extension(const Extension& e) {
    ValidationReport rep;
    const auto& A = e.base();
    if (!(e.kernel.base == A) || !(e.quotient.base == A))
        rep.add("constituents are not over a single base algebra");
    rep.merge(validate_algebra(A), "base: ");
    rep.merge(validate_lra(e.kernel), "kernel: ");
    rep.merge(validate_lra(e.total), "total: ");
    rep.merge(validate_lra(e.quotient), "quotient: ");
    if (!rep.ok()) return rep;

    for (const auto& anchor : e.kernel.anchor)
        if (!anchor.is_zero()) rep.add("kernel anchor is nonzero");

    if (e.total.rank != e.kernel.rank + e.quotient.rank)
        rep.add("rank(total) != rank(kernel) + rank(quotient)");

    // exactness
    AMat pi = amat_compose(A, e.proj, e.incl);
    for (const auto& row : pi)
        for (const auto& entry : row)
            if (!vec_is_zero(entry)) rep.add("proj o incl != 0");
    Matrix inclQ = amat_to_q(A, e.incl, e.total.rank, e.kernel.rank);
    Matrix projQ = amat_to_q(A, e.proj, e.quotient.rank, e.total.rank);
    if (inclQ.rank() != e.kernel.qdim()) rep.add("incl is not injective");
    if (projQ.rank() != e.quotient.qdim()) rep.add("proj is not surjective");

    // morphism conditions on brackets
    for (std::size_t i = 0; i < e.kernel.rank; ++i)
        for (std::size_t j = i + 1; j < e.kernel.rank; ++j) {
            LElem lhs = amat_apply(A, e.incl, e.kernel.bracket[i][j]);
            LElem rhs = e.total.bracket_of(amat_apply(A, e.incl, e.kernel.basis_elem(i)),
                                           amat_apply(A, e.incl, e.kernel.basis_elem(j)));
            if (lhs != rhs)
                rep.add("incl does not preserve brackets at kernel pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (std::size_t i = 0; i < e.total.rank; ++i)
        for (std::size_t j = i + 1; j < e.total.rank; ++j) {
            LElem lhs = amat_apply(A, e.proj, e.total.bracket[i][j]);
            LElem rhs = e.quotient.bracket_of(
                amat_apply(A, e.proj, e.total.basis_elem(i)),
                amat_apply(A, e.proj, e.total.basis_elem(j)));
            if (lhs != rhs)
                rep.add("proj does not preserve brackets at total pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // anchor conditions
    for (std::size_t j = 0; j < e.kernel.rank; ++j)
        if (!e.total.anchor_matrix(amat_apply(A, e.incl, e.kernel.basis_elem(j)))
                 .is_zero())
            rep.add("image of kernel basis " + std::to_string(j) +
                    " has nonzero anchor in the total algebra");
    for (std::size_t i = 0; i < e.total.rank; ++i) {
        Matrix lhs = e.quotient.anchor_matrix(
            amat_apply(A, e.proj, e.total.basis_elem(i)));
        if (!(lhs == e.total.anchor[i]))
            rep.add("proj does not preserve anchors at total basis " +
                    std::to_string(i));
    }
    return rep;
}

ValidationReport validate_connection(const Extension& e, const Connection& omega) {
    ValidationReport rep;
    const auto& A = e.base();
    AMat comp = amat_compose(A, e.proj, omega.omega);
    for (std::size_t i = 0; i < e.quotient.rank; ++i)
        for (std::size_t j = 0; j < e.quotient.rank; ++j) {
            const AElem& want = i == j ? A.unit : A.zero();
            if (comp[i][j] != want)
                rep.add("proj o omega is not the identity at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
        }
    return rep;
}

Connection default_connection(const Extension& e) {
    const auto& A = e.base();
    const std::size_t nT = e.total.rank, nQ = e.quotient.rank, dA = A.dim;
    // unknowns: omega[i][j][a], flattened
    auto var = [&](std::size_t i, std::size_t j, std::size_t a) {
        return (i * nQ + j) * dA + a;
    };
    std::vector<Vec> rows;
    Vec rhs_all;
    for (std::size_t k = 0; k < nQ; ++k)
        for (std::size_t j = 0; j < nQ; ++j)
            for (std::size_t c = 0; c < dA; ++c) {
                Vec row(nT * nQ * dA, Rational(0));
                for (std::size_t i = 0; i < nT; ++i) {
                    Matrix m = A.mult_matrix(e.proj[k][i]);
                    for (std::size_t a = 0; a < dA; ++a)
                        row[var(i, j, a)] += m.at(c, a);
                }
                rows.push_back(std::move(row));
                rhs_all.push_back(k == j ? A.unit[c] : Rational(0));
            }
    auto sol = solve(Matrix::from_rows(rows), rhs_all);
    if (!sol)
        throw std::runtime_error("no A-linear connection exists (proj not split?)");
    Connection omega{zero_amat(A, nT, nQ)};
    for (std::size_t i = 0; i < nT; ++i)
        for (std::size_t j = 0; j < nQ; ++j)
            for (std::size_t a = 0; a < dA; ++a)
                omega.omega[i][j][a] = (*sol)[var(i, j, a)];
    return omega;
}

Connection random_connection(const Extension& e, std::mt19937& rng) {
    const auto& A = e.base();
    Connection omega = default_connection(e);
    std::uniform_int_distribution<int> coef(-3, 3);
    AMat g = zero_amat(A, e.kernel.rank, e.quotient.rank);
    for (auto& row : g)
        for (auto& entry : row)
            for (auto& c : entry) c = rat(coef(rng));
    AMat shift = amat_compose(A, e.incl, g);
    for (std::size_t i = 0; i < e.total.rank; ++i)
        for (std::size_t j = 0; j < e.quotient.rank; ++j)
            omega.omega[i][j] = vec_add(omega.omega[i][j], shift[i][j]);
    return omega;
}

LElem retract(const Extension& e, const LElem& x) {
    Matrix inclQ = amat_to_q(e.base(), e.incl, e.total.rank, e.kernel.rank);
    auto sol = solve(inclQ, e.total.flatten(x));
    if (!sol)
        throw std::runtime_error(
            "retract: element not in the image of the kernel (exactness violated)");
    return e.kernel.unflatten(*sol);
}

AltForm curvature(const Extension& e, const Connection& omega) {
    const auto& A = e.base();
    AltForm out{2, e.kernel.qdim(), {}};
    for (std::size_t a = 0; a < e.quotient.rank; ++a)
        for (std::size_t b = a + 1; b < e.quotient.rank; ++b) {
            LElem br = e.total.bracket_of(omega_column(e, omega, a),
                                          omega_column(e, omega, b));
            LElem through = amat_apply(A, omega.omega, e.quotient.bracket[a][b]);
            LElem defect = br;
            for (std::size_t i = 0; i < e.total.rank; ++i)
                defect[i] = vec_sub(defect[i], through[i]);
            out.set({static_cast<int>(a), static_cast<int>(b)},
                    e.kernel.flatten(retract(e, defect)));
        }
    return out;
}

LRModule adjoint_module(const Extension& e) {
    const auto& A = e.base();
    LRModule M;
    M.qdim = e.kernel.qdim();
    M.a_action = kernel_a_action(e.kernel);
    for (std::size_t i = 0; i < e.total.rank; ++i) {
        Matrix m(M.qdim, M.qdim);
        for (std::size_t col = 0; col < M.qdim; ++col) {
            Vec unit(M.qdim, Rational(0));
            unit[col] = 1;
            LElem x = e.kernel.unflatten(unit);
            LElem br = e.total.bracket_of(e.total.basis_elem(i),
                                          amat_apply(A, e.incl, x));
            Vec img = e.kernel.flatten(retract(e, br));
            for (std::size_t r = 0; r < M.qdim; ++r) m.at(r, col) = img[r];
        }
        M.l_action.push_back(std::move(m));
    }
    return M;
}

LRModule quotient_action_module(const Extension& e, const Connection& omega) {
    const auto& A = e.base();
    LRModule M;
    M.qdim = e.kernel.qdim();
    M.a_action = kernel_a_action(e.kernel);
    LRModule adj = adjoint_module(e);
    for (std::size_t a = 0; a < e.quotient.rank; ++a)
        M.l_action.push_back(adj.act_l(A, omega_column(e, omega, a)));
    return M;
}

AltForm covariant_derivative(const Extension& e, const Connection& omega,
                             const LRModule& M, const AltForm& f) {
    std::vector<Matrix> act;
    for (std::size_t a = 0; a < e.quotient.rank; ++a)
        act.push_back(M.act_l(e.base(), omega_column(e, omega, a)));
    return differential_with_action(e.quotient, M, act, f);
}

bool bianchi_check(const Extension& e, const Connection& omega) {
    AltForm om = curvature(e, omega);
    LRModule adj = adjoint_module(e);
    return covariant_derivative(e, omega, adj, om).is_zero();
}

BuiltExtension extension_from_cocycle(const LieRinehartAlgebra& quotient,
                                      const LieRinehartAlgebra& abelian_kernel,
                                      const std::vector<Matrix>& action,
                                      const AltForm& cocycle) {
    const auto& A = quotient.base;
    for (const auto& row : abelian_kernel.bracket)
        for (const auto& entry : row)
            for (const auto& coeff : entry)
                if (!vec_is_zero(coeff))
                    throw std::invalid_argument(
                        "extension_from_cocycle: kernel is not abelian");

    LRModule M;
    M.qdim = abelian_kernel.qdim();
    M.a_action = kernel_a_action(abelian_kernel);
    M.l_action = action;
    ValidationReport mrep = validate_module(quotient, M);
    if (!mrep.ok())
        throw std::invalid_argument(
            "extension_from_cocycle: kernel action is not a module: " +
            mrep.issues.front());
    if (!ce_differential(quotient, M, cocycle).is_zero())
        throw std::invalid_argument("extension_from_cocycle: not a 2-cocycle");

    const std::size_t nK = abelian_kernel.rank, nQ = quotient.rank;
    LieRinehartAlgebra total;
    total.base = A;
    total.rank = nK + nQ;
    for (std::size_t i = 0; i < nK; ++i)
        total.labels.push_back("k_" + (i < abelian_kernel.labels.size()
                                           ? abelian_kernel.labels[i]
                                           : std::to_string(i)));
    for (std::size_t a = 0; a < nQ; ++a)
        total.labels.push_back(
            "q_" + (a < quotient.labels.size() ? quotient.labels[a]
                                               : std::to_string(a)));
    total.bracket.assign(total.rank,
                         std::vector<LElem>(total.rank, total.zero_elem()));
    auto embed_kernel = [&](const LElem& x) {
        LElem out = total.zero_elem();
        for (std::size_t i = 0; i < nK; ++i) out[i] = x[i];
        return out;
    };
    for (std::size_t a = 0; a < nQ; ++a)
        for (std::size_t j = 0; j < nK; ++j) {
            Vec img = action[a].apply(
                abelian_kernel.flatten(abelian_kernel.basis_elem(j)));
            LElem v = embed_kernel(abelian_kernel.unflatten(img));
            total.bracket[nK + a][j] = v;
            for (auto& comp : v) comp = vec_scale(Rational(-1), comp);
            total.bracket[j][nK + a] = v;
        }
    for (std::size_t a = 0; a < nQ; ++a)
        for (std::size_t b = 0; b < nQ; ++b) {
            if (a == b) continue;
            Tuple t{static_cast<int>(std::min(a, b)),
                    static_cast<int>(std::max(a, b))};
            Vec om = cocycle.get(t);
            if (a > b) om = vec_scale(Rational(-1), om);
            LElem v = embed_kernel(abelian_kernel.unflatten(om));
            const LElem& qb = quotient.bracket[a][b];
            for (std::size_t k = 0; k < nQ; ++k) v[nK + k] = qb[k];
            total.bracket[nK + a][nK + b] = v;
        }
    for (std::size_t i = 0; i < nK; ++i) total.anchor.push_back(Matrix(A.dim, A.dim));
    for (std::size_t a = 0; a < nQ; ++a) total.anchor.push_back(quotient.anchor[a]);

    BuiltExtension out;
    out.e.kernel = abelian_kernel;
    out.e.total = total;
    out.e.quotient = quotient;
    out.e.incl = zero_amat(A, total.rank, nK);
    for (std::size_t i = 0; i < nK; ++i) out.e.incl[i][i] = A.unit;
    out.e.proj = zero_amat(A, nQ, total.rank);
    for (std::size_t a = 0; a < nQ; ++a) out.e.proj[a][nK + a] = A.unit;
    out.omega.omega = zero_amat(A, total.rank, nQ);
    for (std::size_t a = 0; a < nQ; ++a) out.omega.omega[nK + a][a] = A.unit;

    ValidationReport rep = validate_extension(out.e);
    if (!rep.ok())
        throw std::runtime_error("extension_from_cocycle: built extension invalid: " +
                                 rep.issues.front());
    if (!(curvature(out.e, out.omega) == cocycle))
        throw std::runtime_error(
            "extension_from_cocycle: curvature does not match the cocycle");
    return out;
}

Vec cocycle_class(const Extension& e, const Connection& omega) {
    if (!kernel_is_abelian(e))
        throw std::invalid_argument("cocycle_class: kernel must be abelian");
    LRModule M = quotient_action_module(e, omega);
    ValidationReport rep = validate_module(e.quotient, M);
    if (!rep.ok())
        throw std::runtime_error("cocycle_class: induced module invalid: " +
                                 rep.issues.front());
    AltForm om = curvature(e, omega);
    CohomologyResult h2 = cohomology(e.quotient, M, 2);
    std::vector<Vec> cols;
    for (const auto& r : h2.representatives)
        cols.push_back(form_to_flat(r, e.quotient.rank));
    Matrix d1 = d_matrix(e.quotient, M, 1);
    for (std::size_t c = 0; c < d1.cols(); ++c) cols.push_back(d1.col(c));
    auto sol = solve(Matrix::from_cols(cols), form_to_flat(om, e.quotient.rank));
    if (!sol)
        throw std::runtime_error("cocycle_class: curvature is not a cocycle");
    Vec out(h2.betti);
    for (std::size_t i = 0; i < h2.betti; ++i) out[i] = (*sol)[i];
    return out;
}

bool congruent(const Extension& e1, const Extension& e2) {
    if (!(e1.kernel == e2.kernel) || !(e1.quotient == e2.quotient))
        throw std::invalid_argument("congruent: mismatched boundary data");
    Connection w1 = default_connection(e1), w2 = default_connection(e2);

    CenterInfo z1 = center(e1, w1), z2 = center(e2, w2);
    if (z1.basis != z2.basis) return false;
    for (std::size_t a = 0; a < z1.action.size(); ++a)
        if (!(z1.action[a] == z2.action[a])) return false;
    // induced action data must agree verbatim
    LRModule m1 = quotient_action_module(e1, w1);
    LRModule m2 = quotient_action_module(e2, w2);
    for (std::size_t a = 0; a < m1.l_action.size(); ++a)
        if (!(m1.l_action[a] == m2.l_action[a])) return false;

    AltForm diff = curvature(e1, w1);
    AltForm om2 = curvature(e2, w2);
    diff.add(om2.scaled(Rational(-1)));
    if (diff.is_zero()) return true;

    if (kernel_is_abelian(e1)) {
        Matrix d1 = d_matrix(e1.quotient, m1, 1);
        return solve(d1, form_to_flat(diff, e1.quotient.rank)).has_value();
    }
    // non-abelian kernels: compare through the center-valued normalization
    if (z1.basis.empty()) return false;
    Matrix zmat = Matrix::from_cols(z1.basis);
    AltForm diff_z{2, z1.basis.size(), {}};
    for (const auto& [t, v] : diff.values) {
        auto coords = solve(zmat, v);
        if (!coords) return false;
        diff_z.set(t, *coords);
    }
    LRModule Mz;
    Mz.qdim = z1.basis.size();
    Mz.l_action = z1.action;
    // A-action induced on the center coordinates
    for (std::size_t a = 0; a < e1.base().dim; ++a) {
        Matrix m(Mz.qdim, Mz.qdim);
        auto aK = kernel_a_action(e1.kernel);
        for (std::size_t c = 0; c < Mz.qdim; ++c) {
            auto coords = solve(zmat, aK[a].apply(z1.basis[c]));
            if (!coords)
                throw std::runtime_error("congruent: center is not A-stable");
            for (std::size_t r = 0; r < Mz.qdim; ++r) m.at(r, c) = (*coords)[r];
        }
        Mz.a_action.push_back(std::move(m));
    }
    Matrix d1 = d_matrix(e1.quotient, Mz, 1);
    return solve(d1, form_to_flat(diff_z, e1.quotient.rank)).has_value();
}

CenterInfo center(const Extension& e, const Connection& omega) {
    const auto& A = e.base();
    const std::size_t q = e.kernel.qdim();
    // z with [z, x] = 0 for all kernel basis elements x
    std::vector<Vec> rows;
    std::vector<Matrix> ad_cols;
    for (std::size_t j = 0; j < e.kernel.rank; ++j) {
        Matrix m(q, q);
        for (std::size_t col = 0; col < q; ++col) {
            Vec unit(q, Rational(0));
            unit[col] = 1;
            LElem br = e.kernel.bracket_of(e.kernel.unflatten(unit),
                                           e.kernel.basis_elem(j));
            Vec img = e.kernel.flatten(br);
            for (std::size_t r = 0; r < q; ++r) m.at(r, col) = img[r];
        }
        ad_cols.push_back(std::move(m));
    }
    for (const auto& m : ad_cols)
        for (std::size_t r = 0; r < q; ++r) rows.push_back(m.row(r));
    CenterInfo out;
    out.basis = kernel_basis(Matrix::from_rows(rows));
    if (out.basis.empty()) {
        out.action.assign(e.quotient.rank, Matrix(0, 0));
        return out;
    }
    Matrix zmat = Matrix::from_cols(out.basis);

    // A-stability
    auto aK = kernel_a_action(e.kernel);
    for (std::size_t a = 0; a < A.dim; ++a)
        for (const auto& z : out.basis)
            if (!solve(zmat, aK[a].apply(z)))
                throw std::runtime_error("center: not an A-submodule");

    auto induced = [&](const Connection& w) {
        LRModule adj = adjoint_module(e);
        std::vector<Matrix> act;
        for (std::size_t a = 0; a < e.quotient.rank; ++a) {
            Matrix full = adj.act_l(A, omega_column(e, w, a));
            Matrix m(out.basis.size(), out.basis.size());
            for (std::size_t c = 0; c < out.basis.size(); ++c) {
                auto coords = solve(zmat, full.apply(out.basis[c]));
                if (!coords)
                    throw std::runtime_error(
                        "center: induced action does not preserve the center");
                for (std::size_t r = 0; r < out.basis.size(); ++r)
                    m.at(r, c) = (*coords)[r];
            }
            act.push_back(std::move(m));
        }
        return act;
    };
    out.action = induced(omega);

    // connection independence: shift by a nonzero A-linear map into the kernel
    if (e.kernel.rank > 0 && e.quotient.rank > 0) {
        Connection other = omega;
        AMat g = zero_amat(A, e.kernel.rank, e.quotient.rank);
        for (auto& row : g)
            for (auto& entry : row) entry = A.unit;
        AMat shift = amat_compose(A, e.incl, g);
        for (std::size_t i = 0; i < e.total.rank; ++i)
            for (std::size_t j = 0; j < e.quotient.rank; ++j)
                other.omega[i][j] = vec_add(other.omega[i][j], shift[i][j]);
        auto act2 = induced(other);
        for (std::size_t a = 0; a < out.action.size(); ++a)
            if (!(out.action[a] == act2[a]))
                throw std::runtime_error(
                    "center: induced action depends on the connection");
    }
    return out;
}

BuiltExtension act_rho(const Extension& e, const Connection& omega,
                       const AltForm& rho) {
    const auto& A = e.base();
    CenterInfo z = center(e, omega);
    if (!rho.is_zero() && z.basis.empty())
        throw std::invalid_argument("act_rho: kernel has trivial center");

    // rho must be center-valued and a cocycle in Alt_A(quotient, Z)
    AltForm rho_z{2, z.basis.size(), {}};
    if (!rho.is_zero()) {
        Matrix zmat = Matrix::from_cols(z.basis);
        for (const auto& [t, v] : rho.values) {
            auto coords = solve(zmat, v);
            if (!coords)
                throw std::invalid_argument("act_rho: rho is not center-valued");
            rho_z.set(t, *coords);
        }
        LRModule Mz;
        Mz.qdim = z.basis.size();
        Mz.l_action = z.action;
        auto aK = kernel_a_action(e.kernel);
        for (std::size_t a = 0; a < A.dim; ++a) {
            Matrix m(Mz.qdim, Mz.qdim);
            for (std::size_t c = 0; c < Mz.qdim; ++c) {
                auto coords = solve(zmat, aK[a].apply(z.basis[c]));
                for (std::size_t r = 0; r < Mz.qdim; ++r) m.at(r, c) = (*coords)[r];
            }
            Mz.a_action.push_back(std::move(m));
        }
        if (!ce_differential(e.quotient, Mz, rho_z).is_zero())
            throw std::invalid_argument("act_rho: rho is not a cocycle");
    }

    AltForm om = curvature(e, omega);
    om.add(rho);

    const std::size_t nK = e.kernel.rank, nQ = e.quotient.rank;
    LieRinehartAlgebra total;
    total.base = A;
    total.rank = nK + nQ;
    total.labels = e.total.labels.size() == total.rank
                       ? e.total.labels
                       : std::vector<std::string>(total.rank, "b");
    total.bracket.assign(total.rank,
                         std::vector<LElem>(total.rank, total.zero_elem()));
    auto embed_kernel = [&](const LElem& x) {
        LElem out = total.zero_elem();
        for (std::size_t i = 0; i < nK; ++i) out[i] = x[i];
        return out;
    };
    for (std::size_t i = 0; i < nK; ++i)
        for (std::size_t j = 0; j < nK; ++j)
            total.bracket[i][j] = embed_kernel(e.kernel.bracket[i][j]);
    LRModule adj = adjoint_module(e);
    for (std::size_t a = 0; a < nQ; ++a) {
        Matrix act = adj.act_l(A, omega_column(e, omega, a));
        for (std::size_t j = 0; j < nK; ++j) {
            Vec img = act.apply(e.kernel.flatten(e.kernel.basis_elem(j)));
            LElem v = embed_kernel(e.kernel.unflatten(img));
            total.bracket[nK + a][j] = v;
            for (auto& comp : v) comp = vec_scale(Rational(-1), comp);
            total.bracket[j][nK + a] = v;
        }
    }
    for (std::size_t a = 0; a < nQ; ++a)
        for (std::size_t b = 0; b < nQ; ++b) {
            if (a == b) continue;
            Tuple t{static_cast<int>(std::min(a, b)),
                    static_cast<int>(std::max(a, b))};
            Vec v = om.get(t);
            if (a > b) v = vec_scale(Rational(-1), v);
            LElem w = embed_kernel(e.kernel.unflatten(v));
            const LElem& qb = e.quotient.bracket[a][b];
            for (std::size_t k = 0; k < nQ; ++k) w[nK + k] = qb[k];
            total.bracket[nK + a][nK + b] = w;
        }
    for (std::size_t i = 0; i < nK; ++i) total.anchor.push_back(Matrix(A.dim, A.dim));
    for (std::size_t a = 0; a < nQ; ++a) total.anchor.push_back(e.quotient.anchor[a]);

    BuiltExtension out;
    out.e.kernel = e.kernel;
    out.e.total = total;
    out.e.quotient = e.quotient;
    out.e.incl = zero_amat(A, total.rank, nK);
    for (std::size_t i = 0; i < nK; ++i) out.e.incl[i][i] = A.unit;
    out.e.proj = zero_amat(A, nQ, total.rank);
    for (std::size_t a = 0; a < nQ; ++a) out.e.proj[a][nK + a] = A.unit;
    out.omega.omega = zero_amat(A, total.rank, nQ);
    for (std::size_t a = 0; a < nQ; ++a) out.omega.omega[nK + a][a] = A.unit;

    ValidationReport rep = validate_extension(out.e);
    if (!rep.ok())
        throw std::runtime_error("act_rho: built extension invalid: " +
                                 rep.issues.front());
    if (!(curvature(out.e, out.omega) == om))
        throw std::runtime_error("act_rho: curvature does not equal omega + rho");
    return out;
}

} // namespace lrcw
