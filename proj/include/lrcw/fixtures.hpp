#ifndef LRCW_FIXTURES_HPP
#define LRCW_FIXTURES_HPP

#include <optional>

#include "lrcw/extension.hpp"

namespace lrcw {

/// Built-in example, usable both as a plain Lie-Rinehart algebra and,
/// when present, as an extension with its canonical connection.
struct FixtureBundle {
    std::string name;
    LieRinehartAlgebra algebra; // the total algebra for extension fixtures
    LRModule coefficients;      // default cohomology coefficients
    std::optional<Extension> extension;
    std::optional<Connection> connection;
};

/// Catalog entries:
///   FIX-AB2        abelian rank-2 algebra over Q
///   FIX-SL2        sl2 over Q
///   FIX-TP2        rank-1 algebra over Q[t]/(t^2) with anchor t d/dt
///   FIX-HEIS       Heisenberg extension 0 -> Qz -> heis3 -> Q^2 -> 0
///   FIX-HEIS(c)    same with [x,y] = c z, c rational
///   FIX-SPLIT-SL2  direct product 0 -> sl2 -> sl2 + Q -> Q -> 0
/// Throws std::invalid_argument for unknown names.
FixtureBundle builtin_fixture(const std::string& name);

std::vector<std::string> fixture_names();

} // namespace lrcw

#endif
