#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrcw/matrix.hpp"

using namespace lrcw;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("rational parse and print") {
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(parse_rational("-6/3")) == "-2");
    CHECK(to_string(rat(0)) == "0");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("a/b"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rref examples") {
    auto [r1, p1] = rref(Matrix::identity(2));
    CHECK(r1 == Matrix::identity(2));
    CHECK(p1 == std::vector<std::size_t>{0, 1});

    Matrix m = Matrix::from_rows({{rat(2), rat(4)}, {rat(1), rat(2)}});
    auto [r2, p2] = rref(m);
    CHECK(r2 == Matrix::from_rows({{rat(1), rat(2)}, {rat(0), rat(0)}}));
    CHECK(p2 == std::vector<std::size_t>{0});

    auto [r3, p3] = rref(Matrix(3, 3));
    CHECK(r3.is_zero());
    CHECK(p3.empty());
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix::identity(2)).empty());

    auto k = kernel_basis(Matrix::from_rows({{rat(1), rat(2)}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{rat(-2), rat(1)});

    auto k2 = kernel_basis(Matrix(1, 2));
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == Vec{rat(1), rat(0)});
    CHECK(k2[1] == Vec{rat(0), rat(1)});
}

TEST_CASE("solve examples") {
    Vec b{rat(3), rat(-7)};
    CHECK(solve(Matrix::identity(2), b) == b);

    auto x = solve(Matrix::from_rows({{rat(1), rat(1)}}), Vec{rat(3)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{rat(3), rat(0)});

    CHECK(!solve(Matrix::from_rows({{rat(1)}, {rat(1)}}), Vec{rat(0), rat(1)}));
}

TEST_CASE("quotient_basis examples") {
    std::vector<Vec> e1e2{{rat(1), rat(0)}, {rat(0), rat(1)}};
    CHECK(quotient_basis(2, e1e2, e1e2).empty());
    CHECK(quotient_basis(2, {}, e1e2) == e1e2);

    std::vector<Vec> diag{{rat(1), rat(1)}};
    auto q1 = quotient_basis(2, diag, e1e2);
    auto q2 = quotient_basis(2, diag, e1e2);
    REQUIRE(q1.size() == 1);
    CHECK(q1 == q2);

    // containment violation
    CHECK_THROWS(quotient_basis(2, e1e2, diag));
}

TEST_CASE("randomized properties") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int iter = 0; iter < 60; ++iter) {
        Matrix m = random_matrix(rng, dim(rng), dim(rng));

        auto [r, pivots] = rref(m);
        CHECK(rref(r).first == r); // idempotent

        auto ker = kernel_basis(m);
        CHECK(ker.size() + pivots.size() == m.cols()); // rank-nullity
        for (const auto& v : ker) CHECK(vec_is_zero(m.apply(v)));
        if (!ker.empty())
            CHECK(Matrix::from_rows(ker).rank() == ker.size()); // independent

        // solve consistency on a constructed rhs
        Vec x0(m.cols());
        std::uniform_int_distribution<int> coef(-3, 3);
        for (auto& c : x0) c = rat(coef(rng));
        Vec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}
