#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adeq/series.hpp"

namespace adeq {

struct SeriesDocument {
    std::string algebra;
    std::string method;
    int truncation = 0;
    std::vector<Int> coefficients;

    bool operator==(const SeriesDocument&) const = default;
};

// {"algebra":"A1","method":"genfun","truncation":6,"coefficients":["1",...]}
// Coefficients travel as decimal strings so no integer width is implied.
inline std::string emit_series_json(const SeriesDocument& doc) {
    nlohmann::ordered_json j;
    j["algebra"] = doc.algebra;
    j["method"] = doc.method;
    j["truncation"] = doc.truncation;
    std::vector<std::string> cs;
    cs.reserve(doc.coefficients.size());
    for (const auto& c : doc.coefficients) cs.push_back(c.str());
    j["coefficients"] = cs;
    return j.dump();
}

inline SeriesDocument parse_series_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SeriesDocument doc;
    doc.algebra = j.at("algebra").get<std::string>();
    doc.method = j.at("method").get<std::string>();
    doc.truncation = j.at("truncation").get<int>();
    for (const auto& c : j.at("coefficients")) doc.coefficients.emplace_back(c.get<std::string>());
    return doc;
}

// CSV rows "algebra,q,count" with header, LF line endings.
inline std::string emit_counts_csv(const std::vector<std::tuple<std::string, long, Int>>& rows,
                                   bool header = true) {
    std::string out;
    if (header) out += "algebra,q,count\n";
    for (const auto& [alg, q, n] : rows)
        out += alg + "," + std::to_string(q) + "," + n.str() + "\n";
    return out;
}

} // namespace adeq
