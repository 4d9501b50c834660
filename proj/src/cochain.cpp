#include "lrcw/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrcw {

Vec AltForm::get(const Tuple& t) const {
    auto it = values.find(t);
    if (it == values.end()) return Vec(value_dim, Rational(0));
    return it->second;
}

void AltForm::set(const Tuple& t, Vec v) {
    if (static_cast<int>(t.size()) != degree)
        throw std::invalid_argument("AltForm::set: tuple size != degree");
    if (vec_is_zero(v))
        values.erase(t);
    else
        values[t] = std::move(v);
}

AltForm& AltForm::add(const AltForm& other) {
    if (other.degree != degree || other.value_dim != value_dim)
        throw std::invalid_argument("AltForm::add: shape mismatch");
    for (const auto& [t, v] : other.values) set(t, vec_add(get(t), v));
    return *this;
}

AltForm AltForm::scaled(const Rational& s) const {
    AltForm out{degree, value_dim, {}};
    if (s == 0) return out;
    for (const auto& [t, v] : values) out.values[t] = vec_scale(s, v);
    return out;
}

std::vector<Tuple> alt_tuples(std::size_t rank, int p) {
    std::vector<Tuple> out;
    if (p < 0 || p > static_cast<int>(rank)) return out;
    Tuple t(p);
    for (int i = 0; i < p; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (p == 0) break;
        int i = p - 1;
        while (i >= 0 && t[i] == static_cast<int>(rank) - p + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < p; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

std::size_t alt_dim(std::size_t rank, int p, std::size_t value_dim) {
    return alt_tuples(rank, p).size() * value_dim;
}

Vec form_to_flat(const AltForm& f, std::size_t rank) {
    auto tuples = alt_tuples(rank, f.degree);
    Vec out(tuples.size() * f.value_dim, Rational(0));
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        Vec v = f.get(tuples[i]);
        for (std::size_t m = 0; m < f.value_dim; ++m)
            out[i * f.value_dim + m] = v[m];
    }
    return out;
}

AltForm flat_to_form(const Vec& v, std::size_t rank, int p, std::size_t value_dim) {
    auto tuples = alt_tuples(rank, p);
    if (v.size() != tuples.size() * value_dim)
        throw std::invalid_argument("flat_to_form: length mismatch");
    AltForm f{p, value_dim, {}};
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        Vec val(value_dim);
        for (std::size_t m = 0; m < value_dim; ++m) val[m] = v[i * value_dim + m];
        f.set(tuples[i], std::move(val));
    }
    return f;
}

namespace {

// Sign of the permutation sorting `idx`; 0 if a repeat occurs.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    return sign;
}

} // namespace

Vec evaluate(const LieRinehartAlgebra& L, const LRModule& M, const AltForm& f,
             const std::vector<LElem>& args) {
    if (static_cast<int>(args.size()) != f.degree)
        throw std::invalid_argument("evaluate: arity mismatch");
    const std::size_t p = args.size();
    Vec out(M.qdim, Rational(0));
    if (p == 0) return f.get({});

    std::vector<int> idx(p, 0);
    while (true) {
        bool skip = false;
        for (std::size_t s = 0; s < p; ++s)
            if (vec_is_zero(args[s][idx[s]])) { skip = true; break; }
        if (!skip) {
            std::vector<int> sorted = idx;
            int sign = sort_sign(sorted);
            if (sign != 0) {
                Tuple t(sorted.begin(), sorted.end());
                Vec fv = f.get(t);
                if (!vec_is_zero(fv)) {
                    AElem coeff = L.base.unit;
                    for (std::size_t s = 0; s < p; ++s)
                        coeff = L.base.multiply(coeff, args[s][idx[s]]);
                    Vec term = M.act_a(L.base, coeff).apply(fv);
                    out = vec_add(out, vec_scale(Rational(sign), term));
                }
            }
        }
        std::size_t s = 0;
        while (s < p && idx[s] == static_cast<int>(L.rank) - 1) { idx[s] = 0; ++s; }
        if (s == p) break;
        ++idx[s];
    }
    return out;
}

AltForm differential_with_action(const LieRinehartAlgebra& L, const LRModule& M,
                                 const std::vector<Matrix>& act,
                                 const AltForm& f) {
    const int p = f.degree;
    const int n = p + 1;
    AltForm out{n, M.qdim, {}};
    const Rational global(n % 2 == 0 ? 1 : -1);
    for (const auto& T : alt_tuples(L.rank, n)) {
        Vec val(M.qdim, Rational(0));
        // first sum: action terms
        for (int a = 0; a < n; ++a) {
            Tuple rest;
            for (int s = 0; s < n; ++s)
                if (s != a) rest.push_back(T[s]);
            Vec fv = f.get(rest);
            if (vec_is_zero(fv)) continue;
            Vec term = act[T[a]].apply(fv);
            val = vec_add(val, vec_scale(Rational(a % 2 == 0 ? 1 : -1), term));
        }
        // second sum: bracket terms
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const LElem& br = L.bracket[T[a]][T[b]];
                std::vector<LElem> args;
                args.push_back(br);
                for (int s = 0; s < n; ++s)
                    if (s != a && s != b) args.push_back(L.basis_elem(T[s]));
                Vec fv = evaluate(L, M, f, args);
                if (vec_is_zero(fv)) continue;
                val = vec_add(val, vec_scale(Rational((a + b) % 2 == 0 ? 1 : -1), fv));
            }
        out.set(T, vec_scale(global, val));
    }
    return out;
}

AltForm ce_differential(const LieRinehartAlgebra& L, const LRModule& M,
                        const AltForm& f) {
    return differential_with_action(L, M, M.l_action, f);
}

Matrix d_matrix(const LieRinehartAlgebra& L, const LRModule& M, int p) {
    auto tuples = alt_tuples(L.rank, p);
    Matrix out(alt_dim(L.rank, p + 1, M.qdim), alt_dim(L.rank, p, M.qdim));
    std::size_t col = 0;
    for (const auto& t : tuples)
        for (std::size_t m = 0; m < M.qdim; ++m, ++col) {
            AltForm basis{p, M.qdim, {}};
            Vec v(M.qdim, Rational(0));
            v[m] = 1;
            basis.set(t, std::move(v));
            Vec img = form_to_flat(ce_differential(L, M, basis), L.rank);
            for (std::size_t r = 0; r < img.size(); ++r) out.at(r, col) = img[r];
        }
    return out;
}

Vec Pairing::apply(const Vec& x, const Vec& y) const {
    if (map.empty() || map[0].empty()) return {};
    Vec out(map[0][0].size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            out = vec_add(out, vec_scale(x[i] * y[j], map[i][j]));
        }
    }
    return out;
}

ValidationReport validate_pairing(const LieRinehartAlgebra& L, const LRModule& Ml,
                                  const LRModule& Mr, const LRModule& Mt,
                                  const Pairing& mu) {
    ValidationReport rep;
    if (mu.map.size() != Ml.qdim) {
        rep.add("pairing table has wrong size");
        return rep;
    }
    auto act_left = [&](const Matrix& m, std::size_t i, std::size_t j) {
        Vec out(Mt.qdim, Rational(0));
        for (std::size_t k = 0; k < Ml.qdim; ++k)
            if (m.at(k, i) != 0) out = vec_add(out, vec_scale(m.at(k, i), mu.map[k][j]));
        return out;
    };
    auto act_right = [&](const Matrix& m, std::size_t i, std::size_t j) {
        Vec out(Mt.qdim, Rational(0));
        for (std::size_t k = 0; k < Mr.qdim; ++k)
            if (m.at(k, j) != 0) out = vec_add(out, vec_scale(m.at(k, j), mu.map[i][k]));
        return out;
    };
    for (std::size_t a = 0; a < L.base.dim; ++a)
        for (std::size_t i = 0; i < Ml.qdim; ++i)
            for (std::size_t j = 0; j < Mr.qdim; ++j) {
                Vec target = Mt.a_action[a].apply(mu.map[i][j]);
                if (act_left(Ml.a_action[a], i, j) != target)
                    rep.add("pairing not A-linear on the left at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
                if (act_right(Mr.a_action[a], i, j) != target)
                    rep.add("pairing not A-linear on the right at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
    for (std::size_t al = 0; al < L.rank; ++al)
        for (std::size_t i = 0; i < Ml.qdim; ++i)
            for (std::size_t j = 0; j < Mr.qdim; ++j) {
                Vec lhs = Mt.l_action[al].apply(mu.map[i][j]);
                Vec rhs = vec_add(act_left(Ml.l_action[al], i, j),
                                  act_right(Mr.l_action[al], i, j));
                if (lhs != rhs)
                    rep.add("pairing not L-equivariant at L-basis " +
                            std::to_string(al));
            }
    return rep;
}

int shuffle_sign(const std::vector<int>& left_positions, int total) {
    (void)total;
    long inversions = 0;
    for (std::size_t i = 0; i < left_positions.size(); ++i)
        inversions += left_positions[i] - static_cast<int>(i);
    return inversions % 2 == 0 ? 1 : -1;
}

AltForm wedge(const AltForm& f, const AltForm& g, const Pairing& mu,
              std::size_t rank) {
    const int p = f.degree, q = g.degree;
    std::size_t target_dim =
        (mu.map.empty() || mu.map[0].empty()) ? 0 : mu.map[0][0].size();
    AltForm out{p + q, target_dim, {}};
    const Rational global((p * q) % 2 == 0 ? 1 : -1);
    for (const auto& T : alt_tuples(rank, p + q)) {
        Vec val(target_dim, Rational(0));
        // choose the p positions fed to f; order is preserved on both sides
        std::vector<int> pos(p);
        for (int i = 0; i < p; ++i) pos[i] = i;
        while (true) {
            Tuple left, right;
            std::vector<bool> taken(p + q, false);
            for (int i : pos) taken[i] = true;
            for (int s = 0; s < p + q; ++s)
                (taken[s] ? left : right).push_back(T[s]);
            Vec fv = f.get(left);
            if (!vec_is_zero(fv)) {
                Vec gv = g.get(right);
                if (!vec_is_zero(gv)) {
                    int sign = shuffle_sign(pos, p + q);
                    val = vec_add(val, vec_scale(Rational(sign), mu.apply(fv, gv)));
                }
            }
            if (p == 0) break;
            int i = p - 1;
            while (i >= 0 && pos[i] == q + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < p; ++j) pos[j] = pos[j - 1] + 1;
        }
        out.set(T, vec_scale(global, val));
    }
    return out;
}

CohomologyResult cohomology(const LieRinehartAlgebra& L, const LRModule& M, int p) {
    Matrix dp = d_matrix(L, M, p);
    std::vector<Vec> image;
    if (p > 0) {
        Matrix dprev = d_matrix(L, M, p - 1);
        if (!(dp * dprev).is_zero())
            throw std::runtime_error(
                "cohomology: differential does not square to zero");
        for (std::size_t c = 0; c < dprev.cols(); ++c) {
            Vec v = dprev.col(c);
            if (!vec_is_zero(v)) image.push_back(std::move(v));
        }
    }
    std::vector<Vec> cycles = kernel_basis(dp);
    std::vector<Vec> reps = quotient_basis(alt_dim(L.rank, p, M.qdim), image, cycles);
    CohomologyResult out;
    out.betti = reps.size();
    for (const auto& v : reps)
        out.representatives.push_back(flat_to_form(v, L.rank, p, M.qdim));
    return out;
}

ValidationReport validate_graded_module(const LieRinehartAlgebra& L,
                                        const GradedLRModule& C) {
    ValidationReport rep = validate_module(L, C.M);
    if (C.degrees.size() != C.M.qdim) rep.add("degree vector has wrong length");
    if (C.diff.rows() != C.M.qdim || C.diff.cols() != C.M.qdim) {
        rep.add("differential has wrong shape");
        return rep;
    }
    if (!(C.diff * C.diff).is_zero()) rep.add("differential does not square to zero");
    for (std::size_t r = 0; r < C.M.qdim; ++r)
        for (std::size_t c = 0; c < C.M.qdim; ++c)
            if (C.diff.at(r, c) != 0 && C.degrees[r] != C.degrees[c] - 1)
                rep.add("differential is not homogeneous of degree -1");
    for (std::size_t i = 0; i < L.base.dim; ++i)
        if (!(C.diff * C.M.a_action[i] == C.M.a_action[i] * C.diff))
            rep.add("a_action does not commute with the differential at A-basis " +
                    std::to_string(i));
    for (std::size_t i = 0; i < L.rank; ++i)
        if (!(C.diff * C.M.l_action[i] == C.M.l_action[i] * C.diff))
            rep.add("l_action is not a chain map at L-basis " + std::to_string(i));
    return rep;
}

GradedAltForm& GradedAltForm::add(const GradedAltForm& other) {
    for (const auto& [n, f] : other.components) {
        auto it = components.find(n);
        if (it == components.end())
            components[n] = f;
        else
            it->second.add(f);
    }
    for (auto it = components.begin(); it != components.end();)
        it = it->second.is_zero() ? components.erase(it) : std::next(it);
    return *this;
}

bool GradedAltForm::is_zero() const {
    for (const auto& [n, f] : components)
        if (!f.is_zero()) return false;
    return true;
}

GradedAltForm total_differential(const LieRinehartAlgebra& L,
                                 const GradedLRModule& C,
                                 const GradedAltForm& f) {
    GradedAltForm out;
    for (const auto& [n, comp] : f.components) {
        // d1: CE-type operator, arity n -> n+1
        AltForm d1 = ce_differential(L, C.M, comp);
        if (!d1.is_zero()) {
            GradedAltForm g;
            g.components[n + 1] = std::move(d1);
            out.add(g);
        }
        // d0: coefficient differential with the Koszul sign (-1)^n
        AltForm d0{comp.degree, comp.value_dim, {}};
        const Rational sign(n % 2 == 0 ? 1 : -1);
        for (const auto& [t, v] : comp.values)
            d0.set(t, vec_scale(sign, C.diff.apply(v)));
        if (!d0.is_zero()) {
            GradedAltForm g;
            g.components[n] = std::move(d0);
            out.add(g);
        }
    }
    return out;
}

GradedMap hom_differential(const GradedComplex& C, const GradedComplex& U,
                           const GradedMap& f) {
    GradedMap out;
    out.degree = f.degree - 1;
    const int max_deg = static_cast<int>(C.dims.size()) - 1;
    out.blocks.resize(C.dims.size());
    auto u_dim = [&](int k) -> std::size_t {
        return (k >= 0 && k < static_cast<int>(U.dims.size())) ? U.dims[k] : 0;
    };
    const Rational sign((f.degree + 1) % 2 == 0 ? 1 : -1);
    for (int k = 0; k <= max_deg; ++k) {
        Matrix block(u_dim(k + out.degree), C.dims[k]);
        int tgt = k + f.degree;
        if (tgt >= 1 && tgt < static_cast<int>(U.dims.size()) && u_dim(tgt - 1) > 0)
            block = block + U.d[tgt] * f.blocks[k];
        if (k >= 1 && u_dim(k - 1 + f.degree) > 0)
            block = block + (f.blocks[k - 1] * C.d[k]).scaled(sign);
        out.blocks[k] = std::move(block);
    }
    return out;
}

} // namespace lrcw
