#include "lrcw/fixtures.hpp"

#include <stdexcept>

namespace lrcw {

namespace {

LieRinehartAlgebra plain(std::vector<std::string> labels) {
    LieRinehartAlgebra L;
    L.base = CommutativeAlgebra::rationals();
    L.rank = labels.size();
    L.labels = std::move(labels);
    L.bracket.assign(L.rank, std::vector<LElem>(L.rank, L.zero_elem()));
    L.anchor.assign(L.rank, Matrix(1, 1));
    return L;
}

void set_bracket(LieRinehartAlgebra& L, std::size_t i, std::size_t j,
                 std::size_t k, const Rational& c) {
    L.bracket[i][j][k] = {c};
    L.bracket[j][i][k] = {-c};
}

LieRinehartAlgebra ab2() { return plain({"x", "y"}); }

// basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieRinehartAlgebra sl2() {
    LieRinehartAlgebra L = plain({"e", "f", "h"});
    set_bracket(L, 2, 0, 0, rat(2));
    set_bracket(L, 2, 1, 1, rat(-2));
    set_bracket(L, 0, 1, 2, rat(1));
    return L;
}

LieRinehartAlgebra tp2() {
    CommutativeAlgebra A;
    A.dim = 2;
    A.basis_labels = {"1", "t"};
    A.unit = {rat(1), rat(0)};
    A.mult = {{{rat(1), rat(0)}, {rat(0), rat(1)}},
              {{rat(0), rat(1)}, {rat(0), rat(0)}}};
    LieRinehartAlgebra L;
    L.base = A;
    L.rank = 1;
    L.labels = {"X"};
    L.bracket.assign(1, std::vector<LElem>(1, L.zero_elem()));
    Matrix tddt(2, 2);
    tddt.at(1, 1) = 1;
    L.anchor = {tddt};
    return L;
}

AMat unit_amat(const CommutativeAlgebra& A, std::size_t rows, std::size_t cols,
               const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
    AMat f(rows, std::vector<AElem>(cols, A.zero()));
    for (auto [i, j] : ones) f[i][j] = A.unit;
    return f;
}

// total basis (z, x, y), [x, y] = c z
FixtureBundle heis(const Rational& c, const std::string& name) {
    FixtureBundle b;
    b.name = name;
    LieRinehartAlgebra total = plain({"z", "x", "y"});
    set_bracket(total, 1, 2, 0, c);
    b.algebra = total;
    b.coefficients = trivial_module(total);

    Extension e;
    e.kernel = plain({"z"});
    e.total = total;
    e.quotient = ab2();
    e.incl = unit_amat(total.base, 3, 1, {{0, 0}});
    e.proj = unit_amat(total.base, 2, 3, {{0, 1}, {1, 2}});
    b.extension = e;
    b.connection = Connection{unit_amat(total.base, 3, 2, {{1, 0}, {2, 1}})};
    return b;
}

// total basis (e, f, h, u), u central, direct product of sl2 and Q
FixtureBundle split_sl2() {
    FixtureBundle b;
    b.name = "FIX-SPLIT-SL2";
    LieRinehartAlgebra total = plain({"e", "f", "h", "u"});
    set_bracket(total, 2, 0, 0, rat(2));
    set_bracket(total, 2, 1, 1, rat(-2));
    set_bracket(total, 0, 1, 2, rat(1));
    b.algebra = total;
    b.coefficients = trivial_module(total);

    Extension e;
    e.kernel = sl2();
    e.total = total;
    e.quotient = plain({"u"});
    e.incl = unit_amat(total.base, 4, 3, {{0, 0}, {1, 1}, {2, 2}});
    e.proj = unit_amat(total.base, 1, 4, {{0, 3}});
    b.extension = e;
    b.connection = Connection{unit_amat(total.base, 4, 1, {{3, 0}})};
    return b;
}

} // namespace

FixtureBundle builtin_fixture(const std::string& name) {
    if (name == "FIX-AB2") {
        FixtureBundle b;
        b.name = name;
        b.algebra = ab2();
        b.coefficients = trivial_module(b.algebra);
        return b;
    }
    if (name == "FIX-SL2") {
        FixtureBundle b;
        b.name = name;
        b.algebra = sl2();
        b.coefficients = trivial_module(b.algebra);
        return b;
    }
    if (name == "FIX-TP2") {
        FixtureBundle b;
        b.name = name;
        b.algebra = tp2();
        b.coefficients = anchor_module(b.algebra);
        return b;
    }
    if (name == "FIX-HEIS") return heis(rat(1), name);
    if (name.rfind("FIX-HEIS(", 0) == 0 && name.back() == ')')
        return heis(parse_rational(name.substr(9, name.size() - 10)), name);
    if (name == "FIX-SPLIT-SL2") return split_sl2();
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"FIX-AB2", "FIX-SL2", "FIX-TP2", "FIX-HEIS", "FIX-HEIS(c)",
            "FIX-SPLIT-SL2"};
}

} // namespace lrcw
