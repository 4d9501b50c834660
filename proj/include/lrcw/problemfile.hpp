#ifndef LRCW_PROBLEMFILE_HPP
#define LRCW_PROBLEMFILE_HPP

#include <json.hpp>

#include "lrcw/chernweil.hpp"
#include "lrcw/fixtures.hpp"

namespace lrcw {

using Json = nlohmann::ordered_json;

/// Parsed input file: named blocks, all references resolved. Parsing throws
/// std::invalid_argument with a dotted-path location on malformed input.
struct ProblemFile {
    std::map<std::string, CommutativeAlgebra> algebras;
    std::map<std::string, LieRinehartAlgebra> lie_rinehart;

    struct ModuleBlock {
        std::string lra;
        LRModule M;
    };
    std::map<std::string, ModuleBlock> modules;

    struct ExtensionBlock {
        Extension e;
        std::optional<Connection> connection;
    };
    std::map<std::string, ExtensionBlock> extensions;
};

ProblemFile parse_problem_file(const Json& j);

/// FNV-1a hash of the raw input bytes, hex-encoded; keys the report to its
/// input for golden-file testing.
std::string input_digest(const std::string& bytes);

Json vec_to_json(const Vec& v);
Vec json_to_vec(const Json& j, const std::string& where);
Json altform_to_json(const AltForm& f);
AltForm json_to_altform(const Json& j, int degree, std::size_t value_dim,
                        const std::string& where);

} // namespace lrcw

#endif
