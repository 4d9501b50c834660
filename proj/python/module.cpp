#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrcw/chernweil.hpp"
#include "lrcw/fixtures.hpp"

namespace py = pybind11;
using namespace lrcw;

namespace {

std::vector<std::string> vec_strings(const Vec& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

Vec strings_vec(const std::vector<std::string>& v) {
    Vec out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

using FormTable = std::vector<std::pair<Tuple, std::vector<std::string>>>;

FormTable form_table(const AltForm& f) {
    FormTable out;
    for (const auto& [t, v] : f.values) out.push_back({t, vec_strings(v)});
    return out;
}

const Extension& extension_of(const FixtureBundle& b) {
    if (!b.extension)
        throw std::invalid_argument("fixture '" + b.name + "' has no extension");
    return *b.extension;
}

} // namespace

PYBIND11_MODULE(_lrcw, m) {
    m.doc() = "Exact rational computations for finite Lie-Rinehart algebras";

    m.def("fixture_names", &fixture_names);

    m.def("validate", [](const std::string& fixture) {
        auto b = builtin_fixture(fixture);
        ValidationReport rep = validate_lra(b.algebra);
        rep.merge(validate_module(b.algebra, b.coefficients), "module: ");
        if (b.extension) {
            rep.merge(validate_extension(*b.extension), "extension: ");
            rep.merge(validate_connection(*b.extension, *b.connection),
                      "connection: ");
        }
        return rep.issues;
    });

    m.def("cohomology_dims", [](const std::string& fixture) {
        auto b = builtin_fixture(fixture);
        std::vector<std::size_t> dims;
        for (int p = 0; p <= static_cast<int>(b.algebra.rank); ++p)
            dims.push_back(cohomology(b.algebra, b.coefficients, p).betti);
        return dims;
    });

    m.def("curvature", [](const std::string& fixture) {
        auto b = builtin_fixture(fixture);
        return form_table(curvature(extension_of(b), *b.connection));
    });

    m.def("bianchi", [](const std::string& fixture) {
        auto b = builtin_fixture(fixture);
        return bianchi_check(extension_of(b), *b.connection);
    });

    m.def("cocycle_class", [](const std::string& fixture) {
        auto b = builtin_fixture(fixture);
        return vec_strings(cocycle_class(extension_of(b), *b.connection));
    });

    m.def("congruent", [](const std::string& f1, const std::string& f2) {
        auto b1 = builtin_fixture(f1);
        auto b2 = builtin_fixture(f2);
        return congruent(extension_of(b1), extension_of(b2));
    });

    m.def("invariants_dims", [](const std::string& fixture, int max_weight) {
        auto b = builtin_fixture(fixture);
        const auto& e = extension_of(b);
        std::vector<std::size_t> dims;
        for (int k = 0; k <= max_weight; ++k)
            dims.push_back(invariants(e, k).size());
        return dims;
    });

    m.def("chern_weil_classes",
          [](const std::string& fixture, int max_weight) {
              auto b = builtin_fixture(fixture);
              const auto& e = extension_of(b);
              std::map<int, std::vector<std::vector<std::string>>> out;
              int w = std::min(max_weight, default_max_weight(e));
              for (int k = 0; k <= w; ++k) {
                  std::vector<std::vector<std::string>> classes;
                  for (const auto& zeta : invariants(e, k)) {
                      InvariantPolynomial phi{
                          k, unpolarize(e.base(), e.kernel.rank, k, zeta)};
                      classes.push_back(
                          vec_strings(chern_weil_class(e, phi).coordinates));
                  }
                  out[k] = classes;
              }
              return out;
          });

    m.def("chern_weil_form",
          [](const std::string& fixture, int weight,
             const std::vector<std::string>& coeffs) {
              auto b = builtin_fixture(fixture);
              const auto& e = extension_of(b);
              InvariantPolynomial phi{weight, strings_vec(coeffs)};
              return form_table(chern_weil_form(e, *b.connection, phi));
          });

    m.def("verify_classifying_map",
          [](const std::string& fixture, int max_weight) {
              auto b = builtin_fixture(fixture);
              return verify_lemma_3_11(extension_of(b), *b.connection,
                                       max_weight);
          });

    m.def("global_invariant_dims",
          [](const std::string& fixture, int max_weight) {
              auto b = builtin_fixture(fixture);
              auto g = global_invariant(extension_of(b), *b.connection,
                                        max_weight);
              std::map<int, std::size_t> out;
              for (const auto& [k, d] : g.coinvariant_dims) out[k] = d;
              return out;
          });
}
