#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrcw/fixtures.hpp"

using namespace lrcw;

namespace {

// kernel Q z with the trivial action over the abelian rank-2 quotient
struct Ab2Setup {
    LieRinehartAlgebra quotient = builtin_fixture("FIX-AB2").algebra;
    LieRinehartAlgebra kernel;
    std::vector<Matrix> action{Matrix(1, 1), Matrix(1, 1)};
    Ab2Setup() {
        kernel = quotient;
        kernel.rank = 1;
        kernel.labels = {"z"};
        kernel.bracket.assign(1, std::vector<LElem>(1, kernel.zero_elem()));
        kernel.anchor = {Matrix(1, 1)};
    }
    AltForm cocycle(const Rational& c) const {
        AltForm om{2, 1, {}};
        om.set({0, 1}, Vec{c});
        return om;
    }
};

} // namespace

TEST_CASE("fixture extensions validate; corruption is witnessed") {
    for (const char* name : {"FIX-HEIS", "FIX-HEIS(5)", "FIX-SPLIT-SL2"}) {
        auto b = builtin_fixture(name);
        CHECK(validate_extension(*b.extension).ok());
        CHECK(validate_connection(*b.extension, *b.connection).ok());
    }
    auto bad = *builtin_fixture("FIX-HEIS").extension;
    bad.proj[0][0] = bad.base().unit; // now proj o incl != 0
    auto rep = validate_extension(bad);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.find("proj o incl") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("curvature values") {
    auto h = builtin_fixture("FIX-HEIS");
    CHECK(curvature(*h.extension, *h.connection).get({0, 1}) == Vec{rat(1)});
    auto h5 = builtin_fixture("FIX-HEIS(5)");
    CHECK(curvature(*h5.extension, *h5.connection).get({0, 1}) == Vec{rat(5)});
    auto s = builtin_fixture("FIX-SPLIT-SL2");
    CHECK(curvature(*s.extension, *s.connection).is_zero());
}

TEST_CASE("connections are sections; retract rejects outsiders") {
    std::mt19937 rng(31337);
    for (const char* name : {"FIX-HEIS", "FIX-SPLIT-SL2"}) {
        auto b = builtin_fixture(name);
        CHECK(validate_connection(*b.extension, default_connection(*b.extension))
                  .ok());
        for (int i = 0; i < 3; ++i)
            CHECK(validate_connection(*b.extension,
                                      random_connection(*b.extension, rng))
                      .ok());
    }
    auto h = builtin_fixture("FIX-HEIS");
    CHECK_THROWS(retract(*h.extension, h.extension->total.basis_elem(1)));
    CHECK(retract(*h.extension, h.extension->total.basis_elem(0)) ==
          h.extension->kernel.basis_elem(0));
}

TEST_CASE("Bianchi identity over random connections") {
    std::mt19937 rng(2024);
    for (const char* name : {"FIX-HEIS", "FIX-HEIS(5)", "FIX-SPLIT-SL2"}) {
        auto b = builtin_fixture(name);
        CHECK(bianchi_check(*b.extension, *b.connection));
        for (int i = 0; i < 10; ++i)
            CHECK(bianchi_check(*b.extension,
                                random_connection(*b.extension, rng)));
    }
}

TEST_CASE("induced modules validate") {
    auto h = builtin_fixture("FIX-HEIS");
    CHECK(validate_module(h.extension->total, adjoint_module(*h.extension)).ok());
    CHECK(validate_module(
              h.extension->quotient,
              quotient_action_module(*h.extension, *h.connection))
              .ok());
    auto s = builtin_fixture("FIX-SPLIT-SL2");
    CHECK(validate_module(s.extension->total, adjoint_module(*s.extension)).ok());
}

TEST_CASE("classification round trip over the abelian rank-2 quotient") {
    Ab2Setup setup;
    LRModule M;
    M.qdim = 1;
    M.a_action = {Matrix::identity(1)};
    M.l_action = setup.action;
    REQUIRE(validate_module(setup.quotient, M).ok());
    CHECK(cohomology(setup.quotient, M, 2).betti == 1);

    for (long c : {0L, 1L, 2L, -1L}) {
        auto built = extension_from_cocycle(setup.quotient, setup.kernel,
                                            setup.action, setup.cocycle(rat(c)));
        CHECK(validate_extension(built.e).ok());
        Vec cls = cocycle_class(built.e, built.omega);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0] == rat(c));
    }
    // d(cocycle) != 0 is impossible over an abelian quotient with trivial
    // action, but a wrong-size form is refused
    CHECK_THROWS(extension_from_cocycle(setup.quotient, setup.kernel,
                                        setup.action, AltForm{2, 2, {}}));
}

TEST_CASE("congruence distinguishes the Heisenberg family") {
    for (long c1 : {0L, 1L, 2L, -1L})
        for (long c2 : {0L, 1L, 2L, -1L}) {
            auto e1 = builtin_fixture("FIX-HEIS(" + std::to_string(c1) + ")");
            auto e2 = builtin_fixture("FIX-HEIS(" + std::to_string(c2) + ")");
            CHECK(congruent(*e1.extension, *e2.extension) == (c1 == c2));
        }
    // split direct product is congruent to the c = 0 member
    Ab2Setup setup;
    auto split = extension_from_cocycle(setup.quotient, setup.kernel,
                                        setup.action, setup.cocycle(rat(0)));
    auto h0 = builtin_fixture("FIX-HEIS(0)");
    CHECK(congruent(split.e, *h0.extension));
}

TEST_CASE("class coordinates are connection independent") {
    std::mt19937 rng(8);
    auto h = builtin_fixture("FIX-HEIS");
    Vec base = cocycle_class(*h.extension, *h.connection);
    for (int i = 0; i < 5; ++i)
        CHECK(cocycle_class(*h.extension,
                            random_connection(*h.extension, rng)) == base);
}

TEST_CASE("center computation") {
    auto h = builtin_fixture("FIX-HEIS");
    auto z = center(*h.extension, *h.connection);
    REQUIRE(z.basis.size() == 1);
    CHECK(z.basis[0] == Vec{rat(1)});
    for (const auto& m : z.action) CHECK(m.is_zero());

    auto s = builtin_fixture("FIX-SPLIT-SL2");
    CHECK(center(*s.extension, *s.connection).basis.empty());
}

TEST_CASE("torsor action: composition, identity, faithfulness") {
    auto h0 = builtin_fixture("FIX-HEIS(0)");
    const auto& e = *h0.extension;
    const auto& w = *h0.connection;
    auto rho = [&](long c) {
        AltForm r{2, 1, {}};
        r.set({0, 1}, Vec{rat(c)});
        return r;
    };
    // acting by the curvature shift reproduces the Heisenberg family
    for (long c : {1L, 2L, -1L}) {
        auto shifted = act_rho(e, w, rho(c));
        auto target = builtin_fixture("FIX-HEIS(" + std::to_string(c) + ")");
        CHECK(congruent(shifted.e, *target.extension));
        CHECK(congruent(shifted.e, e) == false);
    }
    // identity and additivity
    CHECK(congruent(act_rho(e, w, rho(0)).e, e));
    for (long c1 : {1L, 2L})
        for (long c2 : {1L, -1L}) {
            auto once = act_rho(e, w, rho(c1));
            auto twice = act_rho(once.e, once.omega, rho(c2));
            auto direct = act_rho(e, w, rho(c1 + c2));
            CHECK(congruent(twice.e, direct.e));
        }
    // faithfulness over the spanning set of H^2 cocycles
    for (long c : {1L, 2L, -1L})
        CHECK(congruent(act_rho(e, w, rho(c)).e, e) == false);
    // non-central rho is refused on a centerless kernel
    auto s = builtin_fixture("FIX-SPLIT-SL2");
    AltForm bad{2, 3, {}};
    CHECK(act_rho(*s.extension, *s.connection, bad).e.total.rank == 4);
}

TEST_CASE("covariant derivative reduces to d on the trivial extension") {
    auto tp = builtin_fixture("FIX-TP2");
    Extension e;
    e.kernel = tp.algebra;
    e.kernel.rank = 0;
    e.kernel.labels.clear();
    e.kernel.bracket.clear();
    e.kernel.anchor.clear();
    e.total = tp.algebra;
    e.quotient = tp.algebra;
    e.incl.assign(1, std::vector<AElem>{});
    e.proj = {{tp.algebra.base.unit}};
    REQUIRE(validate_extension(e).ok());
    Connection id{{{tp.algebra.base.unit}}};
    REQUIRE(validate_connection(e, id).ok());
    LRModule M = anchor_module(tp.algebra);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int p = 0; p <= 1; ++p) {
        AltForm f{p, 2, {}};
        for (const auto& t : alt_tuples(1, p)) {
            Vec v(2);
            for (auto& c : v) c = rat(coef(rng));
            f.set(t, v);
        }
        CHECK(covariant_derivative(e, id, M, f) ==
              ce_differential(tp.algebra, M, f));
    }
}
