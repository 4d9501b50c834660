#ifndef LRCW_EXTENSION_HPP
#define LRCW_EXTENSION_HPP

#include <optional>
#include <random>

#include "lrcw/cochain.hpp"

namespace lrcw {

// A-linear map between free A-modules, entries in A: (Fx)_i = sum_j F[i][j] x_j.
using AMat = std::vector<std::vector<AElem>>;

LElem amat_apply(const CommutativeAlgebra& A, const AMat& f, const LElem& x);
/// The induced rational matrix on flattened coordinates.
Matrix amat_to_q(const CommutativeAlgebra& A, const AMat& f, std::size_t rows,
                 std::size_t cols);
AMat amat_compose(const CommutativeAlgebra& A, const AMat& f, const AMat& g);

/// Short exact sequence kernel -> total -> quotient of Lie-Rinehart algebras
/// over one base algebra, with A-linear structure maps.
struct Extension {
    LieRinehartAlgebra kernel; // zero anchor
    LieRinehartAlgebra total;
    LieRinehartAlgebra quotient;
    AMat incl; // total.rank x kernel.rank
    AMat proj; // quotient.rank x total.rank

    const CommutativeAlgebra& base() const { return total.base; }
};

/// A-linear section omega of proj.
struct Connection {
    AMat omega; // total.rank x quotient.rank
};

ValidationReport validate_extension(const Extension& e);
ValidationReport validate_connection(const Extension& e, const Connection& omega);

/// Deterministic connection: pivot-first solve of proj o omega = id.
Connection default_connection(const Extension& e);
/// default + incl o (random A-linear map); still a section.
Connection random_connection(const Extension& e, std::mt19937& rng);

/// Kernel coordinates of a total element lying in the image of incl
/// (pivot-first solve; throws when the element is not in the image).
LElem retract(const Extension& e, const LElem& x);

/// Curvature 2-form on the quotient with values in the kernel (flattened).
AltForm curvature(const Extension& e, const Connection& omega);

/// The kernel as an (A, total)-module via the adjoint action.
LRModule adjoint_module(const Extension& e);

/// The kernel as an (A, quotient)-module through a connection. This is an
/// honest module only when the kernel is abelian; the Theorem 2.6 machinery
/// requires that and validates it.
LRModule quotient_action_module(const Extension& e, const Connection& omega);

/// D^omega on Alt_A(quotient, M) for an (A, total)-module M.
AltForm covariant_derivative(const Extension& e, const Connection& omega,
                             const LRModule& M, const AltForm& f);

/// Generalized Bianchi identity D^omega(curvature) = 0 with adjoint
/// coefficients. False signals an internal inconsistency.
bool bianchi_check(const Extension& e, const Connection& omega);

struct BuiltExtension {
    Extension e;
    Connection omega;
};

/// Theorem 2.6 construction: total = kernel + quotient with the bracket
/// twisted by a 2-cocycle. `action` gives the (A, quotient)-module structure
/// on the abelian kernel, one matrix per quotient basis element on flattened
/// kernel coordinates. Throws unless d(cocycle) = 0.
BuiltExtension extension_from_cocycle(const LieRinehartAlgebra& quotient,
                                      const LieRinehartAlgebra& abelian_kernel,
                                      const std::vector<Matrix>& action,
                                      const AltForm& cocycle);

/// Coordinates of the curvature class against the canonical H^2
/// representatives of Alt_A(quotient, kernel). Abelian kernels only.
Vec cocycle_class(const Extension& e, const Connection& omega);

/// Congruence test at the cocycle level; requires identical boundary data.
bool congruent(const Extension& e1, const Extension& e2);

struct CenterInfo {
    std::vector<Vec> basis;        // flattened kernel coordinates
    std::vector<Matrix> action;    // per quotient basis element, on center coords
};

/// Center of the kernel with the induced (A, quotient)-action; the action is
/// verified connection-independent.
CenterInfo center(const Extension& e, const Connection& omega);

/// Theorem 2.7: shift the curvature by a center-valued 2-cocycle rho,
/// producing an extension with the same outer action. rho is an AltForm on
/// the quotient valued in flattened kernel coordinates, required to take
/// values in the center and to be a cocycle in Alt_A(quotient, Z).
BuiltExtension act_rho(const Extension& e, const Connection& omega,
                       const AltForm& rho);

} // namespace lrcw

#endif
