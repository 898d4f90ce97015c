#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pwss/dataset.hpp"
#include "pwss/strength.hpp"

namespace pwss {

/// Fitted standardization parameters: per-feature mean and population
/// standard deviation. Constant columns carry stdev 0 and are centered
/// only by transform.
struct ScalerParams {
    std::vector<double> mean;
    std::vector<double> stdev;

    static ScalerParams identity(std::size_t dim);

    std::size_t dim() const { return mean.size(); }

    /// z = (x - mean) / stdev, centering only where stdev is 0.
    std::vector<double> transform_row(std::span<const double> x) const;
};

/// Column means and population standard deviations; needs at least 2 rows.
ScalerParams fit_scaler(const DesignMatrix& m);

DesignMatrix transform(const ScalerParams& p, const DesignMatrix& m);

/// x = z * stdev + mean (test support for the round-trip law).
std::vector<double> inverse_transform_row(const ScalerParams& p, std::span<const double> z);

/// Balanced inverse-frequency weights w_c = N / (K * n_c); every class
/// must be present.
struct ClassWeights {
    std::array<double, kClassCount> weight{1.0, 1.0, 1.0};

    double of(StrengthLabel label) const { return weight[label_index(label)]; }
};

ClassWeights class_weights(std::span<const StrengthLabel> labels);

/// Synthetic minority oversampling: each minority class is grown to the
/// majority count with points x + u * (nn - x), u uniform in (0,1), nn one
/// of the k nearest same-class neighbours (Euclidean, ties to the lower
/// row index). Original rows are preserved verbatim at the head of the
/// output; synthesis order is fixed by (class index, sample index) so
/// parallel and serial runs agree. A minority class with size <= k is a
/// data error; an already balanced matrix is returned unchanged.
DesignMatrix smote(const DesignMatrix& m, int k, std::uint64_t seed);

}  // namespace pwss
