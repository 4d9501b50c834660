#include "lrcw/problemfile.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace lrcw {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

Rational parse_entry(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return rat(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& ex) {
            fail(where, ex.what());
        }
    }
    fail(where, "expected a rational (integer or \"p/q\" string)");
}

std::size_t require_uint(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const Json& require(const Json& j, const std::string& key,
                    const std::string& where) {
    if (!j.contains(key)) fail(where, "missing key '" + key + "'");
    return j.at(key);
}

Matrix json_to_matrix(const Json& j, std::size_t rows, std::size_t cols,
                      const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        fail(where, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            fail(where + "[" + std::to_string(r) + "]",
                 "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = parse_entry(j[r][c], where + "[" + std::to_string(r) +
                                                   "][" + std::to_string(c) + "]");
    }
    return m;
}

AElem json_to_aelem(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        fail(where, "expected " + std::to_string(dim) + " coordinates");
    AElem out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = parse_entry(j[i], where + "[" + std::to_string(i) + "]");
    return out;
}

LElem json_to_lelem(const Json& j, std::size_t rank, std::size_t dim,
                    const std::string& where) {
    if (!j.is_array() || j.size() != rank)
        fail(where, "expected " + std::to_string(rank) + " components");
    LElem out(rank);
    for (std::size_t i = 0; i < rank; ++i)
        out[i] = json_to_aelem(j[i], dim, where + "[" + std::to_string(i) + "]");
    return out;
}

AMat json_to_amat(const Json& j, std::size_t rows, std::size_t cols,
                  std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        fail(where, "expected " + std::to_string(rows) + " rows");
    AMat out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            fail(where + "[" + std::to_string(r) + "]",
                 "expected " + std::to_string(cols) + " entries");
        out[r].resize(cols);
        for (std::size_t c = 0; c < cols; ++c)
            out[r][c] = json_to_aelem(j[r][c], dim,
                                      where + "[" + std::to_string(r) + "][" +
                                          std::to_string(c) + "]");
    }
    return out;
}

CommutativeAlgebra parse_algebra(const Json& j, const std::string& where) {
    CommutativeAlgebra A;
    A.dim = require_uint(require(j, "dim", where), where + ".dim");
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels"))
            A.basis_labels.push_back(l.get<std::string>());
        if (A.basis_labels.size() != A.dim)
            fail(where + ".labels", "label count differs from dim");
    }
    A.unit = json_to_aelem(require(j, "unit", where), A.dim, where + ".unit");
    const Json& mult = require(j, "mult", where);
    if (!mult.is_array() || mult.size() != A.dim)
        fail(where + ".mult", "expected dim rows");
    A.mult.resize(A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) {
        if (!mult[i].is_array() || mult[i].size() != A.dim)
            fail(where + ".mult", "expected dim columns");
        for (std::size_t k = 0; k < A.dim; ++k)
            A.mult[i].push_back(json_to_aelem(
                mult[i][k], A.dim,
                where + ".mult[" + std::to_string(i) + "][" + std::to_string(k) +
                    "]"));
    }
    return A;
}

} // namespace

ProblemFile parse_problem_file(const Json& j) {
    ProblemFile pf;
    if (j.contains("algebras"))
        for (const auto& [name, block] : j.at("algebras").items())
            pf.algebras[name] = parse_algebra(block, "algebras." + name);

    auto find_algebra = [&](const std::string& name,
                            const std::string& where) -> CommutativeAlgebra {
        if (name == "Q") return CommutativeAlgebra::rationals();
        auto it = pf.algebras.find(name);
        if (it == pf.algebras.end()) fail(where, "unresolved algebra '" + name + "'");
        return it->second;
    };

    if (j.contains("lie_rinehart"))
        for (const auto& [name, block] : j.at("lie_rinehart").items()) {
            std::string where = "lie_rinehart." + name;
            LieRinehartAlgebra L;
            L.base = find_algebra(
                require(block, "algebra", where).get<std::string>(),
                where + ".algebra");
            L.rank = require_uint(require(block, "rank", where), where + ".rank");
            if (block.contains("labels"))
                for (const auto& l : block.at("labels"))
                    L.labels.push_back(l.get<std::string>());
            else
                for (std::size_t i = 0; i < L.rank; ++i)
                    L.labels.push_back("e" + std::to_string(i));
            const Json& br = require(block, "bracket", where);
            if (!br.is_array() || br.size() != L.rank)
                fail(where + ".bracket", "expected rank rows");
            L.bracket.resize(L.rank);
            for (std::size_t a = 0; a < L.rank; ++a) {
                if (!br[a].is_array() || br[a].size() != L.rank)
                    fail(where + ".bracket", "expected rank columns");
                for (std::size_t b = 0; b < L.rank; ++b)
                    L.bracket[a].push_back(json_to_lelem(
                        br[a][b], L.rank, L.base.dim,
                        where + ".bracket[" + std::to_string(a) + "][" +
                            std::to_string(b) + "]"));
            }
            const Json& an = require(block, "anchor", where);
            if (!an.is_array() || an.size() != L.rank)
                fail(where + ".anchor", "expected one matrix per basis element");
            for (std::size_t a = 0; a < L.rank; ++a)
                L.anchor.push_back(
                    json_to_matrix(an[a], L.base.dim, L.base.dim,
                                   where + ".anchor[" + std::to_string(a) + "]"));
            pf.lie_rinehart[name] = std::move(L);
        }

    auto find_lra = [&](const std::string& name,
                        const std::string& where) -> const LieRinehartAlgebra& {
        auto it = pf.lie_rinehart.find(name);
        if (it == pf.lie_rinehart.end())
            fail(where, "unresolved lie_rinehart block '" + name + "'");
        return it->second;
    };

    if (j.contains("modules"))
        for (const auto& [name, block] : j.at("modules").items()) {
            std::string where = "modules." + name;
            ProblemFile::ModuleBlock mb;
            mb.lra = require(block, "lie_rinehart", where).get<std::string>();
            const LieRinehartAlgebra& L = find_lra(mb.lra, where);
            std::string type =
                block.contains("type") ? block.at("type").get<std::string>() : "";
            if (type == "trivial") {
                mb.M = trivial_module(L);
            } else if (type == "anchor") {
                mb.M = anchor_module(L);
            } else {
                mb.M.qdim = require_uint(require(block, "qdim", where),
                                         where + ".qdim");
                const Json& aa = require(block, "a_action", where);
                if (!aa.is_array() || aa.size() != L.base.dim)
                    fail(where + ".a_action", "expected one matrix per A-basis");
                for (std::size_t a = 0; a < L.base.dim; ++a)
                    mb.M.a_action.push_back(json_to_matrix(
                        aa[a], mb.M.qdim, mb.M.qdim,
                        where + ".a_action[" + std::to_string(a) + "]"));
                const Json& la = require(block, "l_action", where);
                if (!la.is_array() || la.size() != L.rank)
                    fail(where + ".l_action", "expected one matrix per L-basis");
                for (std::size_t a = 0; a < L.rank; ++a)
                    mb.M.l_action.push_back(json_to_matrix(
                        la[a], mb.M.qdim, mb.M.qdim,
                        where + ".l_action[" + std::to_string(a) + "]"));
            }
            pf.modules[name] = std::move(mb);
        }

    if (j.contains("extensions"))
        for (const auto& [name, block] : j.at("extensions").items()) {
            std::string where = "extensions." + name;
            ProblemFile::ExtensionBlock eb;
            eb.e.kernel = find_lra(
                require(block, "kernel", where).get<std::string>(),
                where + ".kernel");
            eb.e.total = find_lra(require(block, "total", where).get<std::string>(),
                                  where + ".total");
            eb.e.quotient = find_lra(
                require(block, "quotient", where).get<std::string>(),
                where + ".quotient");
            std::size_t dim = eb.e.total.base.dim;
            eb.e.incl = json_to_amat(require(block, "incl", where),
                                     eb.e.total.rank, eb.e.kernel.rank, dim,
                                     where + ".incl");
            eb.e.proj = json_to_amat(require(block, "proj", where),
                                     eb.e.quotient.rank, eb.e.total.rank, dim,
                                     where + ".proj");
            if (block.contains("connection"))
                eb.connection = Connection{json_to_amat(
                    block.at("connection"), eb.e.total.rank, eb.e.quotient.rank,
                    dim, where + ".connection")};
            pf.extensions[name] = std::move(eb);
        }

    return pf;
}

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

Vec json_to_vec(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    Vec out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_entry(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Json altform_to_json(const AltForm& f) {
    Json out = Json::array();
    for (const auto& [t, v] : f.values) {
        Json entry;
        entry["args"] = t;
        entry["value"] = vec_to_json(v);
        out.push_back(entry);
    }
    return out;
}

AltForm json_to_altform(const Json& j, int degree, std::size_t value_dim,
                        const std::string& where) {
    AltForm f{degree, value_dim, {}};
    if (!j.is_array()) fail(where, "expected an array of {args, value} entries");
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string here = where + "[" + std::to_string(i) + "]";
        const Json& entry = j[i];
        Tuple t;
        for (const auto& a : require(entry, "args", here)) t.push_back(a.get<int>());
        if (static_cast<int>(t.size()) != degree)
            fail(here + ".args", "expected " + std::to_string(degree) + " indices");
        for (std::size_t a = 1; a < t.size(); ++a)
            if (t[a - 1] >= t[a]) fail(here + ".args", "indices must increase");
        Vec v = json_to_vec(require(entry, "value", here), here + ".value");
        if (v.size() != value_dim)
            fail(here + ".value",
                 "expected " + std::to_string(value_dim) + " coordinates");
        f.set(t, std::move(v));
    }
    return f;
}

} // namespace lrcw
