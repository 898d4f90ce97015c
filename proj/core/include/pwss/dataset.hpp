#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pwss/strength.hpp"

namespace pwss {

/// Numeric training data: one feature row per sample plus a parallel label
/// vector. Rows share one dimension; both invariants are checked by the
/// operations that consume the matrix.
struct DesignMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<StrengthLabel> labels;

    std::size_t size() const { return rows.size(); }
    std::size_t dim() const { return rows.empty() ? 0 : rows.front().size(); }
};

std::array<std::size_t, kClassCount> class_counts(std::span<const StrengthLabel> labels);

/// Throws a data error when rows/labels disagree or rows are ragged.
void validate_matrix(const DesignMatrix& m);

}  // namespace pwss
