#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pwss/dataset.hpp"
#include "pwss/pipeline.hpp"
#include "pwss/strength.hpp"

namespace pwss {

/// 3x3 contingency table; rows are actual classes, columns predictions.
struct ConfusionMatrix {
    std::array<std::array<std::uint64_t, kClassCount>, kClassCount> counts{};

    std::uint64_t total() const;
    std::uint64_t row_sum(int actual) const;
    std::uint64_t column_sum(int predicted) const;

    // One-vs-rest decomposition per class.
    std::uint64_t tp(int c) const { return counts[c][c]; }
    std::uint64_t fp(int c) const { return column_sum(c) - tp(c); }
    std::uint64_t fn(int c) const { return row_sum(c) - tp(c); }
    std::uint64_t tn(int c) const { return total() - tp(c) - fp(c) - fn(c); }
};

ConfusionMatrix confusion(std::span<const StrengthLabel> actual,
                          std::span<const StrengthLabel> predicted);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t support = 0;
};

struct ClassificationReport {
    std::array<ClassMetrics, kClassCount> per_class;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    double accuracy = 0.0;
    bool degenerate = false;  // some metric had a zero denominator
};

/// precision = TP/(TP+FP), recall = TP/(TP+FN), f1 = 2TP/(2TP+FP+FN),
/// each 0 when its denominator is 0 (flagged as degenerate); accuracy is
/// trace/total and macro values are unweighted class means.
ClassificationReport report(const ConfusionMatrix& cm);

/// Stratified fold assignment: disjoint test folds covering every index,
/// per-class fold sizes within 1 of each other.
struct FoldPlan {
    int k = 0;
    std::vector<std::vector<std::size_t>> test_indices;
};

/// Seeded shuffle within each class, then round-robin over folds. Every
/// class present must have at least k members.
FoldPlan kfold(std::span<const StrengthLabel> labels, int k, std::uint64_t seed);

struct CrossValidationSummary {
    double mean_accuracy = 0.0, stdev_accuracy = 0.0;
    double mean_macro_precision = 0.0, stdev_macro_precision = 0.0;
    double mean_macro_recall = 0.0, stdev_macro_recall = 0.0;
    double mean_macro_f1 = 0.0, stdev_macro_f1 = 0.0;
};

struct CrossValidationResult {
    std::vector<ClassificationReport> folds;
    CrossValidationSummary summary;
};

/// Trains on k-1 folds and evaluates on the held-out fold, k times.
/// Summary statistics are the arithmetic mean and population stdev over
/// folds; training failures propagate with the fold index attached.
CrossValidationResult cross_validate(const ModelSpec& spec, const DesignMatrix& data,
                                     int k, std::uint64_t seed);

struct LearningCurvePoint {
    double train_fraction = 0.0;
    ClassificationReport train_report;
    ClassificationReport validation_report;
};

std::vector<double> default_curve_fractions();  // 0.1 .. 0.9

/// Nested stratified subsample of the training pool: the indices for a
/// larger fraction contain those for any smaller one. Exposed for the
/// nesting property tests.
std::vector<std::size_t> curve_subsample_indices(std::span<const StrengthLabel> labels,
                                                 double fraction, std::uint64_t seed);

/// Holds out a stratified validation split (validation_fraction of the
/// data), then trains once per fraction on a nested subsample of the
/// remainder, reporting metrics on both the subsample and the fixed
/// validation set. A subsample missing a class is a data error.
std::vector<LearningCurvePoint> learning_curve(const ModelSpec& spec,
                                               const DesignMatrix& data,
                                               std::span<const double> fractions,
                                               std::uint64_t seed,
                                               double validation_fraction = 0.2);

}  // namespace pwss
