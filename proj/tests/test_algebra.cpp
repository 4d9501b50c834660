#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrcw/algebra.hpp"

using namespace lrcw;

namespace {

// Q[t]/(t^2) with basis {1, t}
CommutativeAlgebra dual_numbers() {
    CommutativeAlgebra A;
    A.dim = 2;
    A.basis_labels = {"1", "t"};
    A.unit = {rat(1), rat(0)};
    A.mult = {{{rat(1), rat(0)}, {rat(0), rat(1)}},
              {{rat(0), rat(1)}, {rat(0), rat(0)}}};
    return A;
}

// Q x Q with the two idempotent generators
CommutativeAlgebra split_quadratic() {
    CommutativeAlgebra A;
    A.dim = 2;
    A.basis_labels = {"u", "v"};
    A.unit = {rat(1), rat(1)};
    A.mult = {{{rat(1), rat(0)}, {rat(0), rat(0)}},
              {{rat(0), rat(0)}, {rat(0), rat(1)}}};
    return A;
}

} // namespace

TEST_CASE("multiply") {
    auto Q = CommutativeAlgebra::rationals();
    CHECK(Q.multiply({rat(2)}, {rat(3)}) == AElem{rat(6)});

    auto A = dual_numbers();
    AElem t{rat(0), rat(1)};
    CHECK(vec_is_zero(A.multiply(t, t)));
    AElem a{rat(3), rat(5)};
    CHECK(A.multiply(A.unit, a) == a);
    CHECK_THROWS(A.multiply({rat(1)}, a));
}

TEST_CASE("validate_algebra") {
    CHECK(validate_algebra(CommutativeAlgebra::rationals()).ok());
    CHECK(validate_algebra(dual_numbers()).ok());
    CHECK(validate_algebra(split_quadratic()).ok());

    auto bad = dual_numbers();
    bad.mult[0][1] = {rat(0), rat(2)}; // breaks commutativity with mult[1][0]
    auto rep = validate_algebra(bad);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.find("commutativity") != std::string::npos &&
            issue.find("(0,1)") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("is_derivation") {
    auto A = dual_numbers();
    CHECK(is_derivation(A, Matrix(2, 2)).first);

    // t d/dt: 1 -> 0, t -> t
    Matrix tddt(2, 2);
    tddt.at(1, 1) = 1;
    CHECK(is_derivation(A, tddt).first);

    // d/dt: t -> 1 is not a derivation of the truncated polynomials
    Matrix ddt(2, 2);
    ddt.at(0, 1) = 1;
    auto [ok, witness] = is_derivation(A, ddt);
    CHECK(!ok);
    CHECK(witness.find("(1,1)") != std::string::npos);
}

TEST_CASE("derivations_basis") {
    CHECK(derivations_basis(CommutativeAlgebra::rationals()).empty());

    auto ders = derivations_basis(dual_numbers());
    REQUIRE(ders.size() == 1);
    Matrix tddt(2, 2);
    tddt.at(1, 1) = 1;
    CHECK(ders[0].matrix == tddt);

    CHECK(derivations_basis(split_quadratic()).empty());
}

TEST_CASE("derivation bracket closure") {
    // The commutator of two derivations is again a derivation; check on a
    // 3-dim truncated polynomial algebra Q[t]/(t^3), whose derivation space
    // is 2-dimensional.
    CommutativeAlgebra A;
    A.dim = 3;
    A.basis_labels = {"1", "t", "t2"};
    A.unit = {rat(1), rat(0), rat(0)};
    A.mult.assign(3, std::vector<AElem>(3, A.zero()));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) A.mult[i][j][i + j] = 1;
    REQUIRE(validate_algebra(A).ok());

    auto ders = derivations_basis(A);
    REQUIRE(ders.size() == 2);
    for (const auto& d1 : ders)
        for (const auto& d2 : ders) {
            Matrix br = d1.matrix * d2.matrix - d2.matrix * d1.matrix;
            CHECK(is_derivation(A, br).first);
        }
}
