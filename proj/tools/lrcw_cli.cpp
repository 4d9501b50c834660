#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lrcw/problemfile.hpp"

using namespace lrcw;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resolved input: either a builtin fixture or a parsed problem file.
struct Source {
    std::optional<FixtureBundle> fixture;
    std::optional<ProblemFile> file;
    Json input_info;
};

Source load_source(const std::string& fixture, const std::string& path) {
    Source s;
    if (!fixture.empty() && !path.empty())
        throw UsageError("give either --fixture or an input file, not both");
    if (!fixture.empty()) {
        try {
            s.fixture = builtin_fixture(fixture);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        s.input_info["fixture"] = fixture;
        s.input_info["digest"] = input_digest(fixture);
        return s;
    }
    if (path.empty()) throw UsageError("an input file or --fixture is required");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::parse_error& ex) {
        throw UsageError(std::string("JSON parse error: ") + ex.what());
    }
    try {
        s.file = parse_problem_file(j);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    s.input_info["file"] = path;
    s.input_info["digest"] = input_digest(bytes);
    return s;
}

struct ExtensionSource {
    Extension e;
    Connection omega;
    std::string connection_origin;
};

ExtensionSource get_extension(const Source& s) {
    ExtensionSource out;
    if (s.fixture) {
        if (!s.fixture->extension)
            throw UsageError("fixture '" + s.fixture->name +
                             "' has no extension");
        out.e = *s.fixture->extension;
        out.omega = *s.fixture->connection;
        out.connection_origin = "canonical";
        return out;
    }
    if (s.file->extensions.empty())
        throw UsageError("input file has no extension block");
    const auto& [name, eb] = *s.file->extensions.begin();
    out.e = eb.e;
    if (eb.connection) {
        out.omega = *eb.connection;
        out.connection_origin = "stored";
    } else {
        out.omega = default_connection(out.e);
        out.connection_origin = "computed";
    }
    return out;
}

void require_valid_extension(const Extension& e, const Connection& omega) {
    ValidationReport rep = validate_extension(e);
    rep.merge(validate_connection(e, omega), "connection: ");
    if (!rep.ok()) throw ValidationError(rep.issues.front());
}

std::pair<LieRinehartAlgebra, LRModule> get_complex(const Source& s) {
    if (s.fixture) return {s.fixture->algebra, s.fixture->coefficients};
    if (!s.file->modules.empty()) {
        const auto& [name, mb] = *s.file->modules.begin();
        return {s.file->lie_rinehart.at(mb.lra), mb.M};
    }
    if (s.file->lie_rinehart.empty())
        throw UsageError("input file has no lie_rinehart block");
    const auto& L = s.file->lie_rinehart.begin()->second;
    return {L, trivial_module(L)};
}

Json report_skeleton(const std::string& command, const Source& s) {
    Json r;
    r["version"] = kVersion;
    r["command"] = command;
    r["input"] = s.input_info;
    return r;
}

void emit(const Json& report, const std::string& output) {
    std::string text = report.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw UsageError("cannot write output file: " + output);
        out << text;
    }
}

Json monomial_labels(const LieRinehartAlgebra& kernel, int k) {
    Json out = Json::array();
    for (const auto& m : sym_basis(kernel.rank, k)) {
        Json labels = Json::array();
        for (int j : m)
            labels.push_back(static_cast<std::size_t>(j) < kernel.labels.size()
                                 ? kernel.labels[j]
                                 : std::to_string(j));
        out.push_back(labels);
    }
    return out;
}

int clamp_weight(const Extension& e, int requested, Json& report) {
    int cap = default_max_weight(e);
    if (requested < 0) return cap;
    if (requested > cap) {
        report["clamped_max_weight"] = cap;
        return cap;
    }
    return requested;
}

Json validation_json(const std::string& name, const ValidationReport& rep) {
    Json out;
    out["block"] = name;
    out["ok"] = rep.ok();
    out["issues"] = rep.issues;
    return out;
}

int cmd_validate(const Source& s, const std::string& output) {
    Json report = report_skeleton("validate", s);
    Json blocks = Json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, const ValidationReport& rep) {
        blocks.push_back(validation_json(name, rep));
        all_ok = all_ok && rep.ok();
    };
    if (s.fixture) {
        const auto& b = *s.fixture;
        record("algebra", validate_algebra(b.algebra.base));
        record("lie_rinehart", validate_lra(b.algebra));
        record("module", validate_module(b.algebra, b.coefficients));
        if (b.extension) {
            record("extension", validate_extension(*b.extension));
            record("connection",
                   validate_connection(*b.extension, *b.connection));
        }
    } else {
        for (const auto& [name, A] : s.file->algebras)
            record("algebras." + name, validate_algebra(A));
        for (const auto& [name, L] : s.file->lie_rinehart)
            record("lie_rinehart." + name, validate_lra(L));
        for (const auto& [name, mb] : s.file->modules)
            record("modules." + name,
                   validate_module(s.file->lie_rinehart.at(mb.lra), mb.M));
        for (const auto& [name, eb] : s.file->extensions) {
            record("extensions." + name, validate_extension(eb.e));
            if (eb.connection)
                record("extensions." + name + ".connection",
                       validate_connection(eb.e, *eb.connection));
        }
    }
    report["blocks"] = blocks;
    report["ok"] = all_ok;
    emit(report, output);
    return all_ok ? 0 : kExitValidation;
}

int cmd_cohomology(const Source& s, int degree, bool all,
                   const std::string& output) {
    auto [L, M] = get_complex(s);
    ValidationReport rep = validate_lra(L);
    rep.merge(validate_module(L, M), "module: ");
    Json report = report_skeleton("cohomology", s);
    if (!rep.ok()) throw ValidationError(rep.issues.front());
    std::vector<int> degrees;
    if (all)
        for (int p = 0; p <= static_cast<int>(L.rank); ++p) degrees.push_back(p);
    else if (degree >= 0)
        degrees.push_back(degree);
    else
        throw UsageError("give --degree P or --all");
    Json results = Json::array();
    for (int p : degrees) {
        CohomologyResult h = cohomology(L, M, p);
        Json entry;
        entry["degree"] = p;
        entry["dim"] = h.betti;
        Json reps = Json::array();
        for (const auto& r : h.representatives) reps.push_back(altform_to_json(r));
        entry["representatives"] = reps;
        results.push_back(entry);
    }
    report["cohomology"] = results;
    report["verified"] = Json{{"d_squared_zero", true}};
    emit(report, output);
    return 0;
}

int cmd_curvature(const Source& s, const std::string& output) {
    ExtensionSource es = get_extension(s);
    require_valid_extension(es.e, es.omega);
    Json report = report_skeleton("curvature", s);
    report["connection"] = es.connection_origin;
    report["kernel_labels"] = es.e.kernel.labels;
    report["curvature"] = altform_to_json(curvature(es.e, es.omega));
    emit(report, output);
    return 0;
}

int cmd_bianchi(const Source& s, const std::string& output) {
    ExtensionSource es = get_extension(s);
    require_valid_extension(es.e, es.omega);
    bool holds = bianchi_check(es.e, es.omega);
    Json report = report_skeleton("bianchi", s);
    report["connection"] = es.connection_origin;
    report["holds"] = holds;
    emit(report, output);
    return holds ? 0 : kExitInternal;
}

int cmd_classify(const Source& s, const std::string& act_file,
                 const std::string& output) {
    ExtensionSource es = get_extension(s);
    require_valid_extension(es.e, es.omega);
    for (const auto& row : es.e.kernel.bracket)
        for (const auto& entry : row)
            for (const auto& c : entry)
                if (!vec_is_zero(c))
                    throw ValidationError(
                        "classification requires an abelian kernel");
    Json report = report_skeleton("classify", s);
    LRModule M = quotient_action_module(es.e, es.omega);
    CohomologyResult h2 = cohomology(es.e.quotient, M, 2);
    report["h2_dim"] = h2.betti;
    Json reps = Json::array();
    for (std::size_t i = 0; i < h2.representatives.size(); ++i) {
        Json entry;
        entry["cocycle"] = altform_to_json(h2.representatives[i]);
        BuiltExtension built = extension_from_cocycle(
            es.e.quotient, es.e.kernel, M.l_action, h2.representatives[i]);
        Vec coords = cocycle_class(built.e, built.omega);
        Vec expected(h2.betti, Rational(0));
        expected[i] = 1;
        entry["round_trip"] = coords == expected;
        reps.push_back(entry);
    }
    report["representatives"] = reps;
    report["input_class"] = vec_to_json(cocycle_class(es.e, es.omega));

    bool round_trips_ok = true;
    for (const auto& entry : report["representatives"])
        round_trips_ok = round_trips_ok && entry["round_trip"].get<bool>();

    if (!act_file.empty()) {
        std::ifstream in(act_file, std::ios::binary);
        if (!in) throw UsageError("cannot open --act file: " + act_file);
        Json aj;
        try {
            aj = Json::parse(in);
        } catch (const Json::parse_error& ex) {
            throw UsageError(std::string("--act JSON parse error: ") + ex.what());
        }
        AltForm rho;
        try {
            if (!aj.contains("rho")) throw std::invalid_argument("rho: missing");
            rho = json_to_altform(aj.at("rho"), 2, es.e.kernel.qdim(), "rho");
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        BuiltExtension shifted = act_rho(es.e, es.omega, rho);
        Json act;
        act["rho"] = altform_to_json(rho);
        act["congruent_to_input"] = congruent(shifted.e, es.e);
        act["shifted_class"] = vec_to_json(
            cocycle_class(shifted.e, shifted.omega));
        report["act"] = act;
    }
    emit(report, output);
    return round_trips_ok ? 0 : kExitInternal;
}

int cmd_invariants(const Source& s, int max_weight, const std::string& output) {
    ExtensionSource es = get_extension(s);
    require_valid_extension(es.e, es.omega);
    Json report = report_skeleton("invariants", s);
    int w = max_weight >= 0 ? max_weight : default_max_weight(es.e);
    Json weights = Json::array();
    const auto& A = es.e.base();
    for (int k = 0; k <= w; ++k) {
        auto basis = invariants(es.e, k);
        Json entry;
        entry["weight"] = k;
        entry["dim"] = basis.size();
        entry["monomials"] = monomial_labels(es.e.kernel, k);
        Json polys = Json::array();
        for (const auto& zeta : basis)
            polys.push_back(vec_to_json(unpolarize(A, es.e.kernel.rank, k, zeta)));
        entry["basis"] = polys;
        weights.push_back(entry);
    }
    report["invariants"] = weights;
    emit(report, output);
    return 0;
}

int cmd_chern_weil(const Source& s, int max_weight, const std::string& output) {
    ExtensionSource es = get_extension(s);
    require_valid_extension(es.e, es.omega);
    Json report = report_skeleton("chern-weil", s);
    int w = clamp_weight(es.e, max_weight, report);
    const auto& A = es.e.base();

    bool lemma = verify_lemma_3_11(es.e, es.omega, w);
    report["verified"] =
        Json{{"classifying_map_cocycle_and_coalgebra_morphism", lemma}};

    Json weights = Json::array();
    for (int k = 0; k <= w; ++k) {
        auto basis = invariants(es.e, k);
        Json entry;
        entry["weight"] = k;
        entry["invariant_dim"] = basis.size();
        entry["monomials"] = monomial_labels(es.e.kernel, k);
        Json classes = Json::array();
        for (const auto& zeta : basis) {
            InvariantPolynomial phi{k, unpolarize(A, es.e.kernel.rank, k, zeta)};
            CharacteristicClass cls = chern_weil_class(es.e, phi);
            Json c;
            c["invariant"] = vec_to_json(phi.coeffs);
            c["representative"] = altform_to_json(cls.representative);
            c["class_coordinates"] = vec_to_json(cls.coordinates);
            classes.push_back(c);
        }
        entry["classes"] = classes;
        weights.push_back(entry);
    }
    report["chern_weil"] = weights;
    emit(report, output);
    return lemma ? 0 : kExitInternal;
}

int cmd_global_invariant(const Source& s, int max_weight,
                         const std::string& output) {
    ExtensionSource es = get_extension(s);
    require_valid_extension(es.e, es.omega);
    Json report = report_skeleton("global-invariant", s);
    int w = max_weight >= 0 ? max_weight : default_max_weight(es.e);
    GlobalInvariant g = global_invariant(es.e, es.omega, w);
    Json weights = Json::array();
    for (const auto& [k, dims] : g.coinvariant_dims) {
        Json entry;
        entry["weight"] = k;
        entry["coinvariant_dim"] = dims;
        entry["projected"] = altform_to_json(g.projected.at(k));
        entry["class_coordinates"] = vec_to_json(g.class_coords.at(k));
        weights.push_back(entry);
    }
    report["global_invariant"] = weights;
    report["verified"] = Json{{"projected_cocycle", true}};
    emit(report, output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computational kernel for finite Lie-Rinehart algebras: "
                 "cohomology, extensions, curvature, and characteristic classes"};
    app.require_subcommand(1);

    struct Common {
        std::string fixture, file, output;
    };
    auto add_common = [&](CLI::App* sub, Common& c) {
        sub->add_option("file", c.file, "input problem file (JSON)");
        sub->add_option("--fixture", c.fixture, "builtin fixture name");
        sub->add_option("--output", c.output, "write the report to a file");
    };

    Common c_validate, c_cohom, c_curv, c_bianchi, c_classify, c_cw, c_inv,
        c_glob;
    int degree = -1, cw_weight = -1, inv_weight = -1, glob_weight = -1;
    bool all_degrees = false;
    std::string act_file;

    add_common(app.add_subcommand("validate", "validate all blocks"), c_validate);
    auto* sub_cohom =
        app.add_subcommand("cohomology", "cohomology of the chain complex");
    add_common(sub_cohom, c_cohom);
    sub_cohom->add_option("--degree", degree, "single degree");
    sub_cohom->add_flag("--all", all_degrees, "all degrees up to the rank");
    add_common(app.add_subcommand("curvature", "curvature of a connection"),
               c_curv);
    add_common(app.add_subcommand("bianchi", "check the Bianchi identity"),
               c_bianchi);
    auto* sub_classify =
        app.add_subcommand("classify", "classify extensions by H^2");
    add_common(sub_classify, c_classify);
    sub_classify->add_option("--act", act_file,
                             "apply a center-valued 2-cocycle (JSON file)");
    auto* sub_cw = app.add_subcommand("chern-weil", "characteristic classes");
    add_common(sub_cw, c_cw);
    sub_cw->add_option("--max-weight", cw_weight, "weight cap");
    auto* sub_inv = app.add_subcommand("invariants", "invariant polynomials");
    add_common(sub_inv, c_inv);
    sub_inv->add_option("--max-weight", inv_weight, "weight cap");
    auto* sub_glob =
        app.add_subcommand("global-invariant", "coinvariant-valued classes");
    add_common(sub_glob, c_glob);
    sub_glob->add_option("--max-weight", glob_weight, "weight cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand("validate"))
            return cmd_validate(load_source(c_validate.fixture, c_validate.file),
                                c_validate.output);
        if (app.got_subcommand("cohomology"))
            return cmd_cohomology(load_source(c_cohom.fixture, c_cohom.file),
                                  degree, all_degrees, c_cohom.output);
        if (app.got_subcommand("curvature"))
            return cmd_curvature(load_source(c_curv.fixture, c_curv.file),
                                 c_curv.output);
        if (app.got_subcommand("bianchi"))
            return cmd_bianchi(load_source(c_bianchi.fixture, c_bianchi.file),
                               c_bianchi.output);
        if (app.got_subcommand("classify"))
            return cmd_classify(load_source(c_classify.fixture, c_classify.file),
                                act_file, c_classify.output);
        if (app.got_subcommand("chern-weil"))
            return cmd_chern_weil(load_source(c_cw.fixture, c_cw.file), cw_weight,
                                  c_cw.output);
        if (app.got_subcommand("invariants"))
            return cmd_invariants(load_source(c_inv.fixture, c_inv.file),
                                  inv_weight, c_inv.output);
        if (app.got_subcommand("global-invariant"))
            return cmd_global_invariant(load_source(c_glob.fixture, c_glob.file),
                                        glob_weight, c_glob.output);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& ex) {
        std::cerr << "validation failure: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "internal verification failure: " << ex.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
