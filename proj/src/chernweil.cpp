#include "lrcw/chernweil.hpp"

#include <stdexcept>

namespace lrcw {

namespace {

// perfect matchings of {0..2k-1} into increasing pairs, with the sign of the
// permutation that lists the pairs (ordered by first element) in sequence
void matchings(std::vector<int>& remaining, std::vector<std::pair<int, int>>& cur,
               std::vector<std::pair<std::vector<std::pair<int, int>>, int>>& out) {
    if (remaining.empty()) {
        std::vector<int> seq;
        for (auto [a, b] : cur) {
            seq.push_back(a);
            seq.push_back(b);
        }
        int inv = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                if (seq[i] > seq[j]) ++inv;
        out.push_back({cur, inv % 2 == 0 ? 1 : -1});
        return;
    }
    int first = remaining[0];
    for (std::size_t i = 1; i < remaining.size(); ++i) {
        int partner = remaining[i];
        std::vector<int> rest;
        for (std::size_t j = 1; j < remaining.size(); ++j)
            if (j != i) rest.push_back(remaining[j]);
        cur.push_back({first, partner});
        matchings(rest, cur, out);
        cur.pop_back();
    }
}

Pairing mult_pairing(const CommutativeAlgebra& A) {
    Pairing mu;
    mu.map.assign(A.dim, std::vector<Vec>(A.dim));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) mu.map[i][j] = A.mult[i][j];
    return mu;
}

Vec class_coordinates(const LieRinehartAlgebra& L, const LRModule& M, int p,
                      const AltForm& f) {
    CohomologyResult h = cohomology(L, M, p);
    std::vector<Vec> cols;
    for (const auto& r : h.representatives) cols.push_back(form_to_flat(r, L.rank));
    if (p > 0) {
        Matrix dprev = d_matrix(L, M, p - 1);
        for (std::size_t c = 0; c < dprev.cols(); ++c) cols.push_back(dprev.col(c));
    }
    auto sol = cols.empty()
                   ? (form_to_flat(f, L.rank).empty() ||
                              vec_is_zero(form_to_flat(f, L.rank))
                          ? std::optional<Vec>(Vec{})
                          : std::nullopt)
                   : solve(Matrix::from_cols(cols), form_to_flat(f, L.rank));
    if (!sol) throw std::runtime_error("class_coordinates: form is not a cocycle");
    Vec out(h.betti);
    for (std::size_t i = 0; i < h.betti; ++i) out[i] = (*sol)[i];
    return out;
}

} // namespace

int default_max_weight(const Extension& e) {
    return static_cast<int>(e.quotient.rank / 2);
}

std::map<int, AltForm> classifying_map(const Extension& e,
                                       const Connection& omega, int w_max) {
    const auto& A = e.base();
    const std::size_t rank = e.kernel.rank;
    std::map<int, AltForm> F;
    AltForm f0{0, A.dim, {}};
    f0.set({}, A.unit);
    F[0] = f0;
    if (w_max < 1) return F;

    AltForm om = curvature(e, omega);
    F[1] = om;
    for (int k = 2; k <= w_max; ++k) {
        AltForm fk{2 * k, sym_dim(A, rank, k), {}};
        for (const auto& T : alt_tuples(e.quotient.rank, 2 * k)) {
            std::vector<int> slots(2 * k);
            for (int i = 0; i < 2 * k; ++i) slots[i] = i;
            std::vector<std::pair<int, int>> cur;
            std::vector<std::pair<std::vector<std::pair<int, int>>, int>> ms;
            matchings(slots, cur, ms);
            Vec total(sym_dim(A, rank, k), Rational(0));
            for (const auto& [pairs, sign] : ms) {
                Vec prod = om.get({T[pairs[0].first], T[pairs[0].second]});
                bool zero = vec_is_zero(prod);
                for (int i = 1; i < k && !zero; ++i) {
                    Vec next = om.get({T[pairs[i].first], T[pairs[i].second]});
                    if (vec_is_zero(next)) {
                        zero = true;
                        break;
                    }
                    prod = sym_mult_by_linear(A, rank, i, prod, next);
                }
                if (!zero)
                    total = vec_add(total, vec_scale(Rational(sign), prod));
            }
            fk.set(T, total);
        }
        F[k] = fk;
    }
    return F;
}

bool verify_lemma_3_11(const Extension& e, const Connection& omega, int w_max) {
    auto F = classifying_map(e, omega, w_max);
    for (const auto& [k, fk] : F) {
        LRModule M = sym_module(e, k);
        if (!covariant_derivative(e, omega, M, fk).is_zero()) return false;
    }
    return coalgebra_morphism_check(e, F, w_max);
}

AltForm chern_weil_form(const Extension& e, const Connection& omega,
                        const InvariantPolynomial& phi) {
    const auto& A = e.base();
    const std::size_t rank = e.kernel.rank;
    const int k = phi.weight;
    if (phi.coeffs.size() != sym_dim(A, rank, k))
        throw std::invalid_argument("chern_weil_form: bad coefficient size");
    Vec zeta = polarize(A, rank, k, phi.coeffs);
    for (std::size_t i = 0; i < e.total.rank; ++i)
        if (!vec_is_zero(dual_action(e, i, k, zeta)))
            throw std::invalid_argument("chern_weil_form: phi is not invariant");

    auto F = classifying_map(e, omega, k);
    AltForm out{2 * k, A.dim, {}};
    auto it = F.find(k);
    if (it != F.end())
        for (const auto& [t, v] : it->second.values)
            out.set(t, functional_eval(A, rank, k, zeta, v));

    if (!ce_differential(e.quotient, anchor_module(e.quotient), out).is_zero())
        throw std::runtime_error("chern_weil_form: result is not a cocycle");
    return out;
}

CharacteristicClass chern_weil_class(const Extension& e,
                                     const InvariantPolynomial& phi) {
    Connection w1 = default_connection(e);
    std::mt19937 rng(20240824u);
    Connection w2 = random_connection(e, rng);
    AltForm f1 = chern_weil_form(e, w1, phi);
    AltForm f2 = chern_weil_form(e, w2, phi);
    LRModule MA = anchor_module(e.quotient);
    Vec c1 = class_coordinates(e.quotient, MA, 2 * phi.weight, f1);
    Vec c2 = class_coordinates(e.quotient, MA, 2 * phi.weight, f2);
    if (c1 != c2)
        throw std::runtime_error(
            "chern_weil_class: class depends on the connection");
    return {phi.weight, f1, c1};
}

InvariantPolynomial invariant_poly_product(const Extension& e,
                                           const InvariantPolynomial& p1,
                                           const InvariantPolynomial& p2) {
    const auto& A = e.base();
    const std::size_t rank = e.kernel.rank;
    Vec z1 = polarize(A, rank, p1.weight, p1.coeffs);
    Vec z2 = polarize(A, rank, p2.weight, p2.coeffs);
    Vec z = invariant_product(A, rank, p1.weight, p2.weight, z1, z2);
    return {p1.weight + p2.weight,
            unpolarize(A, rank, p1.weight + p2.weight, z)};
}

bool multiplicativity_check(const Extension& e, const InvariantPolynomial& p1,
                            const InvariantPolynomial& p2) {
    Connection w = default_connection(e);
    AltForm lhs = chern_weil_form(e, w, invariant_poly_product(e, p1, p2));
    AltForm f1 = chern_weil_form(e, w, p1);
    AltForm f2 = chern_weil_form(e, w, p2);
    AltForm rhs = wedge(f1, f2, mult_pairing(e.base()), e.quotient.rank);
    return lhs == rhs;
}

GlobalInvariant global_invariant(const Extension& e, const Connection& omega,
                                 int w_max) {
    const auto& A = e.base();
    auto F = classifying_map(e, omega, w_max);
    GlobalInvariant out;
    for (const auto& [k, fk] : F) {
        LRModule M = sym_module(e, k);
        // span of the kernel action images
        std::vector<Vec> span;
        for (std::size_t j = 0; j < e.kernel.rank; ++j) {
            Matrix act = M.act_l(
                A, amat_apply(A, e.incl, e.kernel.basis_elem(j)));
            for (std::size_t c = 0; c < act.cols(); ++c) {
                Vec v = act.col(c);
                if (!vec_is_zero(v)) span.push_back(std::move(v));
            }
        }
        std::vector<Vec> standard;
        for (std::size_t c = 0; c < M.qdim; ++c) {
            Vec v(M.qdim, Rational(0));
            v[c] = 1;
            standard.push_back(std::move(v));
        }
        std::vector<Vec> comp = quotient_basis(M.qdim, span, standard);
        out.coinvariant_dims[k] = comp.size();

        std::vector<Vec> all = span;
        for (const auto& v : comp) all.push_back(v);
        Matrix lift = Matrix::from_cols(all);
        auto project = [&](const Vec& v) {
            auto sol = solve(lift, v);
            if (!sol)
                throw std::runtime_error("global_invariant: projection failed");
            Vec coords(comp.size());
            for (std::size_t i = 0; i < comp.size(); ++i)
                coords[i] = (*sol)[span.size() + i];
            return coords;
        };

        // induced module structure on the coinvariants
        LRModule Mq;
        Mq.qdim = comp.size();
        for (std::size_t a = 0; a < A.dim; ++a) {
            Matrix m(Mq.qdim, Mq.qdim);
            for (std::size_t c = 0; c < comp.size(); ++c) {
                Vec img = project(M.a_action[a].apply(comp[c]));
                for (std::size_t r = 0; r < Mq.qdim; ++r) m.at(r, c) = img[r];
            }
            Mq.a_action.push_back(std::move(m));
        }
        for (std::size_t q = 0; q < e.quotient.rank; ++q) {
            Matrix act = M.act_l(A, amat_apply(A, omega.omega,
                                               e.quotient.basis_elem(q)));
            // the action must descend: kernel-action images map into the span
            for (const auto& s : span)
                if (!vec_is_zero(project(act.apply(s))))
                    throw std::runtime_error(
                        "global_invariant: action does not descend");
            Matrix m(Mq.qdim, Mq.qdim);
            for (std::size_t c = 0; c < comp.size(); ++c) {
                Vec img = project(act.apply(comp[c]));
                for (std::size_t r = 0; r < Mq.qdim; ++r) m.at(r, c) = img[r];
            }
            Mq.l_action.push_back(std::move(m));
        }

        AltForm proj_fk{fk.degree, Mq.qdim, {}};
        for (const auto& [t, v] : fk.values) proj_fk.set(t, project(v));
        if (!ce_differential(e.quotient, Mq, proj_fk).is_zero())
            throw std::runtime_error(
                "global_invariant: projected form is not a cocycle");
        out.class_coords[k] =
            class_coordinates(e.quotient, Mq, 2 * k, proj_fk);
        out.projected[k] = std::move(proj_fk);
    }
    return out;
}

} // namespace lrcw
