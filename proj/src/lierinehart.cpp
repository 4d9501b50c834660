#include "lrcw/lierinehart.hpp"

#include <stdexcept>

namespace lrcw {

LElem LieRinehartAlgebra::zero_elem() const {
    return LElem(rank, base.zero());
}

LElem LieRinehartAlgebra::basis_elem(std::size_t i) const {
    LElem x = zero_elem();
    x.at(i) = base.unit;
    return x;
}

Vec LieRinehartAlgebra::flatten(const LElem& x) const {
    Vec v(qdim(), Rational(0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t a = 0; a < base.dim; ++a) v[i * base.dim + a] = x[i][a];
    return v;
}

LElem LieRinehartAlgebra::unflatten(const Vec& v) const {
    if (v.size() != qdim())
        throw std::invalid_argument("unflatten: length mismatch");
    LElem x = zero_elem();
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t a = 0; a < base.dim; ++a) x[i][a] = v[i * base.dim + a];
    return x;
}

LElem LieRinehartAlgebra::bracket_of(const LElem& x, const LElem& y) const {
    LElem out = zero_elem();
    for (std::size_t i = 0; i < rank; ++i) {
        if (vec_is_zero(x[i])) continue;
        for (std::size_t j = 0; j < rank; ++j) {
            if (vec_is_zero(y[j]) && vec_is_zero(x[i])) continue;
            // a b [e_i, e_j]
            if (!vec_is_zero(y[j])) {
                AElem ab = base.multiply(x[i], y[j]);
                for (std::size_t k = 0; k < rank; ++k)
                    out[k] = vec_add(out[k], base.multiply(ab, bracket[i][j][k]));
            }
        }
    }
    // anchor terms: a e_i(b) e_j  and  - b e_j(a) e_i
    for (std::size_t i = 0; i < rank; ++i) {
        if (vec_is_zero(x[i])) continue;
        for (std::size_t j = 0; j < rank; ++j) {
            if (!vec_is_zero(y[j]))
                out[j] = vec_add(out[j],
                                 base.multiply(x[i], anchor[i].apply(y[j])));
        }
    }
    for (std::size_t j = 0; j < rank; ++j) {
        if (vec_is_zero(y[j])) continue;
        for (std::size_t i = 0; i < rank; ++i) {
            if (!vec_is_zero(x[i]))
                out[i] = vec_sub(out[i],
                                 base.multiply(y[j], anchor[j].apply(x[i])));
        }
    }
    return out;
}

Matrix LieRinehartAlgebra::anchor_matrix(const LElem& x) const {
    Matrix m(base.dim, base.dim);
    for (std::size_t i = 0; i < rank; ++i) {
        if (vec_is_zero(x[i])) continue;
        m = m + base.mult_matrix(x[i]) * anchor[i];
    }
    return m;
}

Matrix LRModule::act_a(const CommutativeAlgebra& A, const AElem& a) const {
    Matrix m(qdim, qdim);
    for (std::size_t i = 0; i < A.dim; ++i)
        if (a[i] != 0) m = m + a_action[i].scaled(a[i]);
    return m;
}

Matrix LRModule::act_l(const CommutativeAlgebra& A, const LElem& x) const {
    Matrix m(qdim, qdim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!vec_is_zero(x[i])) m = m + act_a(A, x[i]) * l_action[i];
    return m;
}

ValidationReport validate_lra(const LieRinehartAlgebra& L) {
    ValidationReport rep;
    const auto& A = L.base;
    if (L.bracket.size() != L.rank) {
        rep.add("bracket table has wrong size");
        return rep;
    }
    for (std::size_t i = 0; i < L.rank; ++i) {
        if (L.bracket[i].size() != L.rank || L.anchor.size() != L.rank) {
            rep.add("bracket/anchor tables have wrong size");
            return rep;
        }
        for (std::size_t j = 0; j < L.rank; ++j)
            if (L.bracket[i][j].size() != L.rank) {
                rep.add("bracket entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") has wrong length");
                return rep;
            }
    }

    // antisymmetry
    for (std::size_t i = 0; i < L.rank; ++i) {
        for (std::size_t k = 0; k < L.rank; ++k)
            if (!vec_is_zero(L.bracket[i][i][k]))
                rep.add("bracket [e_i,e_i] nonzero at i=" + std::to_string(i));
        for (std::size_t j = i + 1; j < L.rank; ++j)
            for (std::size_t k = 0; k < L.rank; ++k)
                if (L.bracket[i][j][k] != vec_scale(Rational(-1), L.bracket[j][i][k]))
                    rep.add("antisymmetry fails at pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
    }

    // anchors are derivations
    for (std::size_t i = 0; i < L.rank; ++i) {
        auto [ok, witness] = is_derivation(A, L.anchor[i]);
        if (!ok)
            rep.add("anchor of basis element " + std::to_string(i) +
                    " is not a derivation: " + witness);
    }

    // anchor respects brackets
    for (std::size_t i = 0; i < L.rank; ++i)
        for (std::size_t j = i + 1; j < L.rank; ++j) {
            Matrix lhs = L.anchor_matrix(L.bracket[i][j]);
            Matrix rhs = L.anchor[i] * L.anchor[j] - L.anchor[j] * L.anchor[i];
            if (!(lhs == rhs))
                rep.add("anchor incompatible with bracket at pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // Jacobi on basis triples, outer brackets expanded A-multilinearly
    for (std::size_t i = 0; i < L.rank; ++i)
        for (std::size_t j = i + 1; j < L.rank; ++j)
            for (std::size_t k = j + 1; k < L.rank; ++k) {
                LElem ei = L.basis_elem(i), ej = L.basis_elem(j), ek = L.basis_elem(k);
                LElem sum = L.bracket_of(L.bracket_of(ei, ej), ek);
                LElem t2 = L.bracket_of(L.bracket_of(ej, ek), ei);
                LElem t3 = L.bracket_of(L.bracket_of(ek, ei), ej);
                for (std::size_t s = 0; s < L.rank; ++s)
                    sum[s] = vec_add(sum[s], vec_add(t2[s], t3[s]));
                bool zero = true;
                for (std::size_t s = 0; s < L.rank; ++s)
                    if (!vec_is_zero(sum[s])) zero = false;
                if (!zero)
                    rep.add("Jacobi identity fails at triple (" + std::to_string(i) +
                            "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
    return rep;
}

ValidationReport validate_module(const LieRinehartAlgebra& L, const LRModule& M) {
    ValidationReport rep;
    const auto& A = L.base;
    if (M.a_action.size() != A.dim || M.l_action.size() != L.rank) {
        rep.add("module action tables have wrong size");
        return rep;
    }
    for (const auto& m : M.a_action)
        if (m.rows() != M.qdim || m.cols() != M.qdim) {
            rep.add("a_action matrix has wrong shape");
            return rep;
        }
    for (const auto& m : M.l_action)
        if (m.rows() != M.qdim || m.cols() != M.qdim) {
            rep.add("l_action matrix has wrong shape");
            return rep;
        }

    if (!(M.act_a(A, A.unit) == Matrix::identity(M.qdim)))
        rep.add("a_action is not unital");
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j)
            if (!(M.a_action[i] * M.a_action[j] == M.act_a(A, A.mult[i][j])))
                rep.add("a_action fails multiplicativity at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");

    // (1.2.b): alpha(a m) = a alpha(m) + alpha(a) m on generators
    for (std::size_t j = 0; j < L.rank; ++j)
        for (std::size_t i = 0; i < A.dim; ++i) {
            Matrix lhs = M.l_action[j] * M.a_action[i];
            Matrix rhs = M.a_action[i] * M.l_action[j] +
                         M.act_a(A, L.anchor[j].apply(A.basis_elem(i)));
            if (!(lhs == rhs))
                rep.add("module axiom (1.2.b) fails at L-basis " + std::to_string(j) +
                        ", A-basis " + std::to_string(i));
        }

    // Lie condition with bracket expanded to A-coefficients
    for (std::size_t i = 0; i < L.rank; ++i)
        for (std::size_t j = i + 1; j < L.rank; ++j) {
            Matrix lhs = M.act_l(A, L.bracket[i][j]);
            Matrix rhs = M.l_action[i] * M.l_action[j] - M.l_action[j] * M.l_action[i];
            if (!(lhs == rhs))
                rep.add("module Lie condition fails at pair (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
        }
    return rep;
}

LRModule trivial_module(const LieRinehartAlgebra& L) {
    if (L.base.dim != 1)
        throw std::invalid_argument("trivial_module requires base algebra Q");
    LRModule M;
    M.qdim = 1;
    M.a_action = {Matrix::identity(1)};
    M.l_action.assign(L.rank, Matrix(1, 1));
    return M;
}

LRModule anchor_module(const LieRinehartAlgebra& L) {
    LRModule M;
    M.qdim = L.base.dim;
    for (std::size_t i = 0; i < L.base.dim; ++i)
        M.a_action.push_back(L.base.mult_matrix(L.base.basis_elem(i)));
    for (std::size_t i = 0; i < L.rank; ++i) M.l_action.push_back(L.anchor[i]);
    return M;
}

} // namespace lrcw
