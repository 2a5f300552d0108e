#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "nmatrix.hpp"
#include "partition.hpp"
#include "plane_partition.hpp"
#include "poly.hpp"
#include "word.hpp"

// JSON forms shared by the library and the CLI:
//   PlanePartition  [[4,4,2],[4,2,1],[2,2]]
//   Partition       [3,3,2]
//   NMatrix         {"rows": 3, "cols": 4, "data": [[0,1,0,1], ...]}
//   Word            {"m": 4, "letters": [1,3,2,4,3,4]}
//   MultiPoly       {"vars": ["x1","z1"], "terms": [{"exp": [1,1], "coef": "2"}, ...]}
// Polynomial terms are listed in ascending graded-lex order; coefficients
// are exact decimal strings.

namespace ppmat::io {

using nlohmann::json;

namespace detail {

inline std::vector<int> int_array(const json& j, const char* what) {
    ppmat::detail::require(j.is_array(), std::string(what) + " must be a JSON array");
    std::vector<int> out;
    for (const auto& v : j) {
        ppmat::detail::require(v.is_number_integer(), std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace detail

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) { return Partition(detail::int_array(j, "partition")); }

inline json to_json(const PlanePartition& p) { return p.rows(); }

inline PlanePartition plane_partition_from_json(const json& j) {
    ppmat::detail::require(j.is_array(), "plane partition must be an array of rows");
    PlanePartition::Rows rows;
    for (const auto& r : j) rows.push_back(detail::int_array(r, "plane partition row"));
    return PlanePartition(std::move(rows));
}

inline json to_json(const NMatrix& d) {
    return json{{"rows", d.rows()}, {"cols", d.cols()}, {"data", d.to_rows()}};
}

inline NMatrix nmatrix_from_json(const json& j) {
    ppmat::detail::require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("data"),
                           "matrix must be an object with rows, cols and data");
    ppmat::detail::require(j["rows"].is_number_integer() && j["cols"].is_number_integer(),
                           "matrix dimensions must be integers");
    std::vector<std::vector<int>> data;
    ppmat::detail::require(j["data"].is_array(), "matrix data must be an array of rows");
    for (const auto& r : j["data"]) data.push_back(detail::int_array(r, "matrix row"));
    return NMatrix(j["rows"].get<int>(), j["cols"].get<int>(), data);
}

inline json to_json(const Word& w) { return json{{"m", w.alphabet_size()}, {"letters", w.letters()}}; }

inline Word word_from_json(const json& j) {
    ppmat::detail::require(j.is_object() && j.contains("m") && j.contains("letters"),
                           "word must be an object with m and letters");
    ppmat::detail::require(j["m"].is_number_integer(), "word alphabet size must be an integer");
    return Word(detail::int_array(j["letters"], "word letters"), j["m"].get<int>());
}

inline json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exp", e}, {"coef", c.str()}});
    return json{{"vars", p.vars().variable_names()}, {"terms", terms}};
}

/// Rebuilds the variable table from names: "x1","x2",... form an indexed
/// family (indices must run 1..n in order); a name without a numeric
/// suffix is a scalar.
inline VarTablePtr var_table_from_names(const std::vector<std::string>& names) {
    VarTable table;
    std::size_t i = 0;
    while (i < names.size()) {
        const std::string& name = names[i];
        std::size_t cut = name.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
        ppmat::detail::require(cut > 0, "variable name needs a non-numeric prefix: " + name);
        if (cut == name.size()) {
            table.scalar(name);
            ++i;
            continue;
        }
        const std::string family = name.substr(0, cut);
        int arity = 0;
        while (i < names.size() && names[i] == family + std::to_string(arity + 1)) {
            ++arity;
            ++i;
        }
        ppmat::detail::require(arity > 0, "indexed variables must start at 1 and be consecutive: " + name);
        table.indexed(family, arity);
    }
    return table.share();
}

inline MultiPoly multipoly_from_json(const json& j) {
    ppmat::detail::require(j.is_object() && j.contains("vars") && j.contains("terms"),
                           "polynomial must be an object with vars and terms");
    std::vector<std::string> names;
    for (const auto& n : j["vars"]) {
        ppmat::detail::require(n.is_string(), "variable names must be strings");
        names.push_back(n.get<std::string>());
    }
    const auto vars = var_table_from_names(names);
    MultiPoly p(vars);
    for (const auto& t : j["terms"]) {
        ppmat::detail::require(t.contains("exp") && t.contains("coef") && t["coef"].is_string(),
                               "term must have exp and a string coef");
        Exponent e = detail::int_array(t["exp"], "exponent");
        ppmat::detail::require(static_cast<int>(e.size()) == vars->size(), "exponent length does not match vars");
        BigInt c;
        try {
            c = BigInt(t["coef"].get<std::string>());
        } catch (const std::exception&) {
            throw InvalidArgument("coefficient is not a decimal integer");
        }
        p += MultiPoly::monomial(vars, e, c);
    }
    return p;
}

/// Parses text, mapping JSON syntax errors onto InvalidArgument.
inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace ppmat::io
