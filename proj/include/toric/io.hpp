#pragma once

// Degree matrices from JSON documents and built-in dataset names.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/graded_ring.hpp"

namespace toric {

/// {"picRank": r, "numGens": n, "columns": [[r ints]...], "labels": [...], "heft": [r ints]}
inline DegreeMatrix degree_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("input must be a JSON object");
    for (const char* key : {"picRank", "numGens", "columns"})
        if (!j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    auto integer = [](const nlohmann::json& v, const std::string& what) -> long {
        if (!v.is_number_integer()) throw InvalidInput(what + " must be an integer");
        return v.get<long>();
    };
    auto int_vector = [&](const nlohmann::json& v, const std::string& what) {
        if (!v.is_array()) throw InvalidInput(what + " must be an array");
        IntVec out;
        for (const auto& x : v) out.emplace_back(integer(x, what + " entry"));
        return out;
    };
    const long r = integer(j["picRank"], "picRank");
    const long n = integer(j["numGens"], "numGens");
    if (r <= 0 || n <= 0) throw InvalidInput("picRank and numGens must be positive");
    const auto& cols = j["columns"];
    if (!cols.is_array() || cols.size() != static_cast<std::size_t>(n))
        throw InvalidInput("columns must list numGens multidegrees");
    std::vector<Multidegree> columns;
    for (const auto& c : cols) {
        columns.push_back(int_vector(c, "column"));
        if (columns.back().size() != static_cast<std::size_t>(r))
            throw InvalidInput("column of length " + std::to_string(columns.back().size()) + ", expected picRank " +
                               std::to_string(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw InvalidInput("labels must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw InvalidInput("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    std::optional<Multidegree> heft;
    if (j.contains("heft")) heft = int_vector(j["heft"], "heft");
    return DegreeMatrix(std::move(columns), std::move(labels), std::move(heft));
}

inline DegreeMatrix load_degree_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
    return degree_matrix_from_json(j);
}

inline const std::vector<std::string>& dataset_names() {
    static const std::vector<std::string> names = {"delpezzo4", "p1", "p2", "p3", "p1xp1"};
    return names;
}

inline DegreeMatrix dataset(const std::string& name) {
    if (name == "delpezzo4") return delpezzo4().degrees;
    if (name == "p1") return projective_space(1);
    if (name == "p2") return projective_space(2);
    if (name == "p3") return projective_space(3);
    if (name == "p1xp1") return p1xp1();
    throw UsageError("unknown dataset " + name);
}

}  // namespace toric
