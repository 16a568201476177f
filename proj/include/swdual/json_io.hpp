#pragma once

#include <json.hpp>

#include "swdual/centralizer.hpp"
#include "swdual/relation_report.hpp"

namespace swdual {

// --- matrix fixtures: array of arrays of rational-function strings -------

inline nlohmann::json matrix_to_json(const Matrix<RatFunc>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<RatFunc> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix fixture must be a nonempty array of arrays");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix<RatFunc> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw std::invalid_argument("matrix fixture rows have uneven lengths");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = RatFunc::parse(j[i][c].get<std::string>());
    }
    return m;
}

// --- reports --------------------------------------------------------------

inline nlohmann::json to_json(const RelationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json item{{"relation", c.relation},
                            {"indices", c.indices},
                            {"residual_norm", c.zero ? "zero" : "nonzero"}};
        if (c.witness)
            item["witness_entry"] = {{"row", c.witness->row},
                                     {"col", c.witness->col},
                                     {"value", c.witness->value}};
        checks.push_back(std::move(item));
    }
    return checks;
}

inline nlohmann::json to_json(const DimValue& v) {
    nlohmann::json out{{"computed", v.computed}};
    if (v.computed) {
        out["dim"] = v.dim;
        out["probabilistic"] = v.probabilistic;
    }
    return out;
}

inline nlohmann::json to_json(const CommutationReport& r) {
    nlohmann::json out{{"pairs_checked", r.pairs_checked}, {"all_commute", r.all_commute}};
    if (r.failing_pair)
        out["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
    return out;
}

inline nlohmann::json to_json(const DualityReport& r) {
    return {{"dim_hecke_image", to_json(r.hecke_image)},
            {"dim_super_image", to_json(r.super_image)},
            {"dim_commutant_of_hecke", to_json(r.commutant_of_hecke)},
            {"dim_commutant_of_super", to_json(r.commutant_of_super)},
            {"hook_sum_f2", r.hook_sum_f2.get_str()},
            {"hook_sum_d2", r.hook_sum_d2.get_str()},
            {"hook_sum_fd", r.hook_sum_fd.get_str()},
            {"mutual_commutation_checked", r.mutual_commutation_checked},
            {"mutual_commutation", r.mutual_commutation},
            {"verdict_double_centralizer", r.double_centralizer},
            {"verdict_hecke_dim_matches_hooks", r.hecke_dim_matches_hooks}};
}

inline nlohmann::json to_json(const HookReport& r) {
    return {{"dim_hecke_image", to_json(r.hecke_image)},
            {"dim_super_image", to_json(r.super_image)},
            {"hook_sum_f2", r.hook_sum_f2.get_str()},
            {"hook_sum_d2", r.hook_sum_d2.get_str()},
            {"hook_sum_fd", r.hook_sum_fd.get_str()},
            {"tensor_dim", r.tensor_dim.get_str()},
            {"verdict_counting_identity", r.counting_identity},
            {"verdict_hecke_dim", r.hecke_dim_matches},
            {"super_dim_checked", r.super_dim_checked},
            {"verdict_super_dim", r.super_dim_matches}};
}

inline nlohmann::json to_json(const SpecializationReport& r) {
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& p : r.dims) {
        nlohmann::json item{{"name", p.name},
                            {"exact", to_json(p.exact)},
                            {"specialized_computed", p.specialized_computed}};
        if (p.specialized_computed) {
            item["specialized"] = p.specialized;
            item["leq"] = p.leq;
            item["equal"] = p.equal;
        }
        dims.push_back(std::move(item));
    }
    return {{"t", r.t.get_str()},
            {"dims", std::move(dims)},
            {"all_leq", r.all_leq},
            {"all_equal", r.all_equal}};
}

} // namespace swdual
