#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pwss/dataset.hpp"
#include "pwss/model.hpp"

namespace pwss {

enum class SplitCriterion { gini, entropy };

struct TreeConfig {
    SplitCriterion criterion = SplitCriterion::gini;
    int max_depth = 12;
    int min_samples_split = 2;
    int min_samples_leaf = 1;
};

struct SplitChoice {
    std::size_t feature = 0;
    double threshold = 0.0;
    double impurity_decrease = 0.0;
};

/// Greedy split search over midpoints between consecutive distinct sorted
/// values of each candidate feature. Returns the split with the largest
/// impurity decrease (ties to lower feature index, then lower threshold),
/// or nothing when no split decreases impurity. Rows route left when
/// x[feature] <= threshold.
std::optional<SplitChoice> best_split(const DesignMatrix& data,
                                      std::span<const std::size_t> row_indices,
                                      std::span<const std::size_t> candidate_features,
                                      SplitCriterion criterion,
                                      int min_samples_leaf = 1);

/// Flat tree node; leaf iff feature < 0. Children are indices into the
/// owning vector, which stores nodes in preorder.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::array<std::uint64_t, kClassCount> class_counts{};
};

struct Tree {
    std::vector<TreeNode> nodes;

    const TreeNode& route(std::span<const double> x) const;
    StrengthLabel predict_label(std::span<const double> x) const;
    std::array<double, kClassCount> leaf_proba(std::span<const double> x) const;
};

class TreeModel final : public TrainedModel {
public:
    Tree tree;
    TreeConfig config;
    ScalerParams scaler;

    ClassifierKind kind() const override { return ClassifierKind::decision_tree; }
    std::size_t feature_dim() const override { return scaler.dim(); }
    const ScalerParams& scaler_params() const override { return scaler; }
    std::array<double, kClassCount> predict_proba(std::span<const double> x) const override;
};

/// Recursive CART growth; stops on depth, min_samples_split, purity or
/// lack of positive gain.
TreeModel fit_tree(const DesignMatrix& train, const TreeConfig& config = {});

struct ForestConfig {
    int n_trees = 100;
    int features_per_split = 0;  // 0 means ceil(sqrt(dim))
    bool bootstrap = true;
    std::uint64_t base_seed = 0;
    TreeConfig tree;
};

class ForestModel final : public TrainedModel {
public:
    std::vector<Tree> trees;
    ForestConfig config;
    ScalerParams scaler;

    ClassifierKind kind() const override { return ClassifierKind::random_forest; }
    std::size_t feature_dim() const override { return scaler.dim(); }
    const ScalerParams& scaler_params() const override { return scaler; }

    /// Vote fractions; predict() is therefore the majority vote with ties
    /// to the lower class index.
    std::array<double, kClassCount> predict_proba(std::span<const double> x) const override;
};

StrengthLabel majority_vote(const std::array<std::uint64_t, kClassCount>& votes);

/// Bagged forest: tree t trains on a seeded bootstrap resample (seed
/// substream hashed from base_seed and t) and draws features_per_split
/// candidate features at every split.
ForestModel fit_forest(const DesignMatrix& train, const ForestConfig& config = {});

struct GBMConfig {
    int n_estimators = 200;
    double learning_rate = 0.1;
    int max_depth = 4;
    double l2 = 1.0;            // lambda
    double l1 = 0.0;            // alpha
    double min_split_gain = 0.0;  // gamma
    std::uint64_t seed = 0;
};

/// Regression tree used inside the boosting ensemble; leaf iff feature < 0.
struct RegNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double weight = 0.0;
};

struct RegTree {
    std::vector<RegNode> nodes;

    double value(std::span<const double> x) const;
};

inline double soft_threshold(double g, double alpha) {
    double magnitude = (g < 0 ? -g : g) - alpha;
    if (magnitude < 0) magnitude = 0;
    return g < 0 ? -magnitude : magnitude;
}

class GBMModel final : public TrainedModel {
public:
    std::vector<std::array<RegTree, kClassCount>> rounds;
    GBMConfig config;
    ScalerParams scaler;
    std::vector<double> train_loss;  // multiclass log-loss after each round

    ClassifierKind kind() const override { return ClassifierKind::gradient_boosting; }
    std::size_t feature_dim() const override { return scaler.dim(); }
    const ScalerParams& scaler_params() const override { return scaler; }
    std::array<double, kClassCount> predict_proba(std::span<const double> x) const override;

    /// Boosted scores sum_r eta * tree_rc(x), before the softmax.
    std::array<double, kClassCount> scores(std::span<const double> x) const;
};

/// Multiclass softmax boosting with second-order leaf weights
/// w = -soft_threshold(G, alpha) / (H + lambda) and split gain
/// 0.5*[GL^2/(HL+l) + GR^2/(HR+l) - (GL+GR)^2/(HL+HR+l)] - gamma; splits
/// with non-positive gain are rejected. Non-finite scores abort with a
/// training error naming the round.
GBMModel fit_gbm(const DesignMatrix& train, const GBMConfig& config = {});

struct GridSpec {
    std::vector<double> learning_rates;
    std::vector<int> max_depths;
    std::vector<int> n_estimators;
    int folds = 5;
    std::uint64_t seed = 0;
};

struct GridCell {
    GBMConfig config;
    double mean_macro_f1 = 0.0;
    double stdev_macro_f1 = 0.0;
};

struct GridResult {
    GBMConfig best;
    std::vector<GridCell> table;
};

/// Exhaustive search over the candidate lists with one shared stratified
/// fold plan; selects the highest mean macro-F1, ties broken by fewer
/// estimators, then shallower depth, then lower learning rate.
GridResult grid_search(const DesignMatrix& train, const GridSpec& grid);

}  // namespace pwss
