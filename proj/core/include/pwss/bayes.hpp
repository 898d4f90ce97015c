#pragma once

#include <array>
#include <span>
#include <vector>

#include "pwss/balance.hpp"
#include "pwss/dataset.hpp"
#include "pwss/model.hpp"

namespace pwss {

/// Gaussian naive Bayes over the numeric feature vector. All likelihood
/// work happens in log space.
class NBModel final : public TrainedModel {
public:
    std::array<double, kClassCount> priors{};
    std::array<std::vector<double>, kClassCount> means;
    std::array<std::vector<double>, kClassCount> variances;  // smoothed, >= epsilon
    double epsilon = 0.0;
    ScalerParams scaler;

    ClassifierKind kind() const override { return ClassifierKind::naive_bayes; }
    std::size_t feature_dim() const override { return means[0].size(); }
    const ScalerParams& scaler_params() const override { return scaler; }
    std::array<double, kClassCount> predict_proba(std::span<const double> x) const override;

    /// Unnormalized log scores log P(c) + sum_j log N(x_j; mu, sigma^2).
    /// The shared evidence term cancels, so the softmax of these scores is
    /// the Bayes posterior.
    std::array<double, kClassCount> log_posterior(std::span<const double> x) const;
};

/// Priors are class frequencies; per-class moments use the population
/// convention and are accumulated order-independently, so permuting rows
/// gives a bit-identical model. The smoothing floor is
/// smoothing_factor * max_j var(feature_j) added to every variance.
/// Every class needs at least two samples.
NBModel fit_nb(const DesignMatrix& train, double smoothing_factor = 1e-9);

}  // namespace pwss
