#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swdual/matrix.hpp"

namespace swdual {

// One verified operator identity: `zero` means the residual matrix
// vanished exactly; otherwise `witness` points at a nonzero entry.
struct RelationCheck {
    std::string relation;
    std::vector<int> indices;
    bool zero = false;

    struct Witness {
        std::size_t row = 0;
        std::size_t col = 0;
        std::string value;
    };
    std::optional<Witness> witness;
};

struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_zero() const {
        for (const auto& c : checks)
            if (!c.zero) return false;
        return true;
    }
};

// Records the residual; fills the witness from the first nonzero entry.
inline void record_residual(RelationReport& report, std::string relation,
                            std::vector<int> indices, const Matrix<RatFunc>& residual) {
    RelationCheck check{std::move(relation), std::move(indices), true, std::nullopt};
    for (std::size_t i = 0; i < residual.rows() && check.zero; ++i)
        for (std::size_t j = 0; j < residual.cols(); ++j)
            if (!residual(i, j).is_zero()) {
                check.zero = false;
                check.witness = RelationCheck::Witness{i, j, residual(i, j).str()};
                break;
            }
    report.checks.push_back(std::move(check));
}

} // namespace swdual
