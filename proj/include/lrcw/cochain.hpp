#ifndef LRCW_COCHAIN_HPP
#define LRCW_COCHAIN_HPP

#include <map>
#include <vector>

#include "lrcw/lierinehart.hpp"

namespace lrcw {

// Strictly increasing tuple of L-basis indices.
using Tuple = std::vector<int>;

/// Degree-p alternating A-multilinear form on L with values in a module of
/// rational dimension value_dim. Stored sparsely on increasing basis tuples;
/// an absent tuple means zero.
struct AltForm {
    int degree = 0;
    std::size_t value_dim = 0;
    std::map<Tuple, Vec> values;

    Vec get(const Tuple& t) const;
    void set(const Tuple& t, Vec v); // drops zero values

    AltForm& add(const AltForm& other);
    AltForm scaled(const Rational& s) const;
    bool is_zero() const { return values.empty(); }
    bool operator==(const AltForm& other) const = default;
};

/// All increasing p-tuples from {0..rank-1}, lexicographically ordered.
/// This ordering fixes the flat coordinates of every Alt space.
std::vector<Tuple> alt_tuples(std::size_t rank, int p);

std::size_t alt_dim(std::size_t rank, int p, std::size_t value_dim);
Vec form_to_flat(const AltForm& f, std::size_t rank);
AltForm flat_to_form(const Vec& v, std::size_t rank, int p, std::size_t value_dim);

/// Alternating A-multilinear evaluation on general arguments. A-coefficients
/// act on values through M's a_action.
Vec evaluate(const LieRinehartAlgebra& L, const LRModule& M, const AltForm& f,
             const std::vector<LElem>& args);

/// The Cartan-Chevalley-Eilenberg-type coboundary with the Eilenberg-Koszul
/// global sign (-1)^n, with the first-sum action given by arbitrary matrices
/// `act` (one per L-basis element). With act = M.l_action this is the CE
/// differential; with act given through a connection it is the covariant
/// derivative.
AltForm differential_with_action(const LieRinehartAlgebra& L, const LRModule& M,
                                 const std::vector<Matrix>& act,
                                 const AltForm& f);

AltForm ce_differential(const LieRinehartAlgebra& L, const LRModule& M,
                        const AltForm& f);

/// Matrix of d: Alt^p -> Alt^{p+1} in flat coordinates.
Matrix d_matrix(const LieRinehartAlgebra& L, const LRModule& M, int p);

/// Pairing M' (x) M'' -> M, stored on rational basis pairs.
struct Pairing {
    std::vector<std::vector<Vec>> map; // map[i][j] in the target module
    Vec apply(const Vec& x, const Vec& y) const;
};

ValidationReport validate_pairing(const LieRinehartAlgebra& L, const LRModule& Ml,
                                  const LRModule& Mr, const LRModule& Mt,
                                  const Pairing& mu);

/// Shuffle/wedge product with the global sign (-1)^{pq}.
AltForm wedge(const AltForm& f, const AltForm& g, const Pairing& mu,
              std::size_t rank);

struct CohomologyResult {
    std::size_t betti = 0;
    std::vector<AltForm> representatives;
};

/// H^p of (Alt_A(L,M), d) with canonical RREF-based representatives.
/// Throws if d o d != 0 at this spot, which signals invalid inputs.
CohomologyResult cohomology(const LieRinehartAlgebra& L, const LRModule& M, int p);

/// Graded (A,L)-chain complex folded into one module: each rational basis
/// coordinate carries a degree, and diff lowers degree by one.
struct GradedLRModule {
    LRModule M;
    std::vector<int> degrees; // size M.qdim
    Matrix diff;              // qdim x qdim, degree -1, squares to zero
};

ValidationReport validate_graded_module(const LieRinehartAlgebra& L,
                                        const GradedLRModule& C);

/// Family of alternating forms indexed by arity, as required for
/// graded-coefficient differentials.
struct GradedAltForm {
    std::map<int, AltForm> components; // arity -> form

    GradedAltForm& add(const GradedAltForm& other);
    bool is_zero() const;
};

/// d = d0 + d1 on Alt_A(L,C): d1 is the CE-type operator on each arity, and
/// d0 f = (-1)^arity diff o f, which makes the two anticommute.
GradedAltForm total_differential(const LieRinehartAlgebra& L,
                                 const GradedLRModule& C,
                                 const GradedAltForm& f);

/// Finite chain complex by degree; d[k] maps degree k to degree k-1.
struct GradedComplex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> d; // d[0] unused (maps out of degree 0 are zero)
};

/// Homogeneous degree-r map between graded complexes, block per source degree.
struct GradedMap {
    int degree = 0;
    std::vector<Matrix> blocks; // blocks[k]: C_k -> U_{k+degree}
};

/// Hom-complex differential Df = d f + (-1)^{|f|+1} f d.
GradedMap hom_differential(const GradedComplex& C, const GradedComplex& U,
                           const GradedMap& f);

int shuffle_sign(const std::vector<int>& left_positions, int total);

} // namespace lrcw

#endif
