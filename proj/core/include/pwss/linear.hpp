#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pwss/balance.hpp"
#include "pwss/dataset.hpp"
#include "pwss/model.hpp"

namespace pwss {

/// Numerically stable logistic function; exact 0.5 at z = 0.
double sigmoid(double z);

struct LogisticConfig {
    double learning_rate = 0.1;
    int epochs = 300;
    double l2 = 1e-4;
    std::optional<ClassWeights> class_weights;
    std::uint64_t seed = 0;
    bool standardize = true;
};

/// Multinomial (softmax) logistic regression trained by full-batch
/// gradient descent from zero initialization.
class LogisticModel final : public TrainedModel {
public:
    std::array<std::vector<double>, kClassCount> weights;  // per class, in scaled space
    std::array<double, kClassCount> bias{};
    ScalerParams scaler;
    LogisticConfig config;
    std::vector<double> loss_history;  // loss after 0..epochs updates; last entry is final

    ClassifierKind kind() const override { return ClassifierKind::logistic_regression; }
    std::size_t feature_dim() const override { return weights[0].size(); }
    const ScalerParams& scaler_params() const override { return scaler; }
    std::array<double, kClassCount> predict_proba(std::span<const double> x) const override;

    /// Softmax probabilities of an already scaled row.
    std::array<double, kClassCount> proba_scaled(std::span<const double> z) const;
};

struct LogisticGradients {
    std::array<std::vector<double>, kClassCount> weights;
    std::array<double, kClassCount> bias{};
};

/// Weighted mean softmax cross-entropy plus (l2/2)*||W||^2, with its exact
/// gradient. The batch is taken as already being in the model's scaled
/// space; sample weights come from config.class_weights (1 when absent).
std::pair<double, LogisticGradients> loss_and_gradient(const LogisticModel& model,
                                                       const DesignMatrix& batch);

/// Fits the scaler (unless config.standardize is off), transforms, and
/// runs full-batch gradient descent for config.epochs. All three classes
/// must be present; a non-finite loss aborts with a training error naming
/// the epoch.
LogisticModel fit_logistic(const DesignMatrix& train, const LogisticConfig& config = {});

}  // namespace pwss
