#pragma once

/// @file groupspec.hpp
/// Group-spec files: hand-writable JSON descriptions of finite matrix groups
/// over Z/p^nZ, and of integer matrix groups for the mod-p injectivity
/// check. Entries may be any integers; they are reduced on load, so a parse
/// -> serialize -> parse round trip is the identity.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "locoh/caps.hpp"
#include "locoh/errors.hpp"
#include "locoh/matgroup.hpp"
#include "locoh/modring.hpp"

namespace locoh {

struct GroupSpecFile {
    std::int64_t p = 0;
    int n = 0;
    int dimension = 0;
    std::vector<ModMatrix> generators; // reduced on load
    std::optional<std::string> label;

    friend bool operator==(const GroupSpecFile&, const GroupSpecFile&) = default;
};

struct IntegerGroupSpecFile {
    int dimension = 0;
    std::vector<IntMatrix> generators;
    std::optional<std::int64_t> cap;

    friend bool operator==(const IntegerGroupSpecFile&, const IntegerGroupSpecFile&) = default;
};

namespace detail {

inline std::vector<std::vector<std::int64_t>> parse_matrix_rows(const nlohmann::json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw value_error(std::string(what) + ": generator must be a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& rj : j) {
        if (!rj.is_array() || static_cast<int>(rj.size()) != dim)
            throw value_error(std::string(what) + ": generator row has wrong length");
        std::vector<std::int64_t> row;
        for (const auto& ej : rj) {
            if (!ej.is_number_integer())
                throw value_error(std::string(what) + ": matrix entries must be integers");
            row.push_back(ej.get<std::int64_t>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

inline GroupSpecFile parse_group_spec(const nlohmann::json& j) {
    if (!j.is_object())
        throw value_error("group spec: top level must be an object");
    if (!j.contains("modulus") || !j["modulus"].is_object() ||
        !j["modulus"].contains("p") || !j["modulus"].contains("n") ||
        !j["modulus"]["p"].is_number_integer() || !j["modulus"]["n"].is_number_integer())
        throw value_error("group spec: missing or malformed \"modulus\": {\"p\": int, \"n\": int}");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw value_error("group spec: missing integer \"dimension\"");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw value_error("group spec: missing array \"generators\"");

    GroupSpecFile spec;
    spec.p = j["modulus"]["p"].get<std::int64_t>();
    spec.n = j["modulus"]["n"].get<int>();
    spec.dimension = j["dimension"].get<int>();
    const Modulus m(spec.p, spec.n); // validates odd prime, n >= 1, width
    if (spec.dimension < 1)
        throw value_error("group spec: dimension must be positive");
    for (const auto& gj : j["generators"]) {
        auto rows = detail::parse_matrix_rows(gj, spec.dimension, "group spec");
        std::vector<std::int64_t> flat;
        for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
        ModMatrix g(m, spec.dimension, spec.dimension, std::move(flat));
        if (!is_invertible(g))
            throw value_error("group spec: generator is not invertible mod p: " + g.to_string());
        spec.generators.push_back(std::move(g));
    }
    if (j.contains("label")) {
        if (!j["label"].is_string())
            throw value_error("group spec: label must be a string");
        spec.label = j["label"].get<std::string>();
    }
    return spec;
}

inline nlohmann::ordered_json group_spec_to_json(const GroupSpecFile& spec) {
    nlohmann::ordered_json j;
    j["modulus"] = {{"p", spec.p}, {"n", spec.n}};
    j["dimension"] = spec.dimension;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : spec.generators) {
        auto mj = nlohmann::ordered_json::array();
        for (int i = 0; i < g.rows; ++i) {
            auto rj = nlohmann::ordered_json::array();
            for (int k = 0; k < g.cols; ++k) rj.push_back(g.at(i, k));
            mj.push_back(std::move(rj));
        }
        gens.push_back(std::move(mj));
    }
    j["generators"] = std::move(gens);
    if (spec.label) j["label"] = *spec.label;
    return j;
}

inline IntegerGroupSpecFile parse_integer_group_spec(const nlohmann::json& j) {
    if (!j.is_object())
        throw value_error("integer group spec: top level must be an object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw value_error("integer group spec: missing integer \"dimension\"");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw value_error("integer group spec: missing array \"generators\"");
    IntegerGroupSpecFile spec;
    spec.dimension = j["dimension"].get<int>();
    if (spec.dimension < 1)
        throw value_error("integer group spec: dimension must be positive");
    for (const auto& gj : j["generators"]) {
        auto rows = detail::parse_matrix_rows(gj, spec.dimension, "integer group spec");
        std::vector<std::int64_t> flat;
        for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
        spec.generators.emplace_back(spec.dimension, spec.dimension, std::move(flat));
    }
    if (j.contains("cap")) {
        if (!j["cap"].is_number_integer() || j["cap"].get<std::int64_t>() < 1)
            throw value_error("integer group spec: cap must be a positive integer");
        spec.cap = j["cap"].get<std::int64_t>();
    }
    return spec;
}

inline nlohmann::ordered_json integer_group_spec_to_json(const IntegerGroupSpecFile& spec) {
    nlohmann::ordered_json j;
    j["dimension"] = spec.dimension;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : spec.generators) {
        auto mj = nlohmann::ordered_json::array();
        for (int i = 0; i < g.rows; ++i) {
            auto rj = nlohmann::ordered_json::array();
            for (int k = 0; k < g.cols; ++k) rj.push_back(to_int64(g.at(i, k), "integer group spec entry"));
            mj.push_back(std::move(rj));
        }
        gens.push_back(std::move(mj));
    }
    j["generators"] = std::move(gens);
    if (spec.cap) j["cap"] = *spec.cap;
    return j;
}

namespace detail {

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw value_error("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw value_error("JSON parse error in " + path + ": " + e.what());
    }
}

} // namespace detail

inline GroupSpecFile load_group_spec(const std::string& path) {
    return parse_group_spec(detail::load_json_file(path));
}

inline IntegerGroupSpecFile load_integer_group_spec(const std::string& path) {
    return parse_integer_group_spec(detail::load_json_file(path));
}

inline MatrixGroup build_group(const GroupSpecFile& spec, const Caps& caps = {}) {
    return enumerate(Modulus(spec.p, spec.n), spec.dimension, spec.generators, caps.group_order);
}

} // namespace locoh
