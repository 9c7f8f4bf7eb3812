#include <json.hpp>

#include "tpx/coding.hpp"
#include "tpx/model.hpp"

namespace tpx {

ExchangeProblem parse_problem_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw InvalidProblemError(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object()) throw InvalidProblemError("problem must be a JSON object");
    if (!doc.contains("num_clients") || !doc["num_clients"].is_number_integer()) {
        throw InvalidProblemError("\"num_clients\" must be an integer");
    }
    if (!doc.contains("costs") || !doc["costs"].is_array()) {
        throw InvalidProblemError("\"costs\" must be an array");
    }

    std::vector<Rational> costs;
    costs.reserve(doc["costs"].size());
    for (const auto& entry : doc["costs"]) {
        if (entry.is_number_integer()) {
            costs.emplace_back(entry.get<std::int64_t>());
        } else if (entry.is_string()) {
            try {
                costs.push_back(parse_decimal(entry.get<std::string>()));
            } catch (const std::invalid_argument& err) {
                throw InvalidProblemError(std::string("bad cost: ") + err.what());
            }
        } else {
            // Binary floats are not exact; fractional costs must arrive as
            // decimal strings.
            throw InvalidProblemError("costs must be integers or decimal strings");
        }
    }
    return ExchangeProblem(doc["num_clients"].get<int>(), std::move(costs));
}

std::string encoding_matrix_to_json(const EncodingMatrix& e) {
    const SparsityPattern& p = e.pattern;
    nlohmann::ordered_json doc;
    doc["n"] = p.n;

    std::vector<int> y(p.n, 0);
    for (int owner : p.column_owner) ++y[owner - 1];
    doc["y"] = y;
    doc["field_m"] = e.field().bits();

    nlohmann::ordered_json columns = nlohmann::ordered_json::array();
    for (int c = 0; c < p.cols; ++c) {
        nlohmann::ordered_json column;
        column["owner"] = p.column_owner[c];
        nlohmann::ordered_json entries = nlohmann::ordered_json::object();
        for (int r = 0; r < p.rows; ++r) {
            FieldElement v = e.values.at(r, c);
            if (v != 0) entries[std::to_string(r)] = v;
        }
        column["entries"] = std::move(entries);
        columns.push_back(std::move(column));
    }
    doc["columns"] = std::move(columns);
    return doc.dump();
}

} // namespace tpx
