#include "pwss/linear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pwss/error.hpp"

namespace pwss {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

namespace {

std::array<double, kClassCount> softmax(const std::array<double, kClassCount>& logits) {
    const double peak = *std::max_element(logits.begin(), logits.end());
    std::array<double, kClassCount> p{};
    double sum = 0.0;
    for (int c = 0; c < kClassCount; ++c) {
        p[c] = std::exp(logits[c] - peak);
        sum += p[c];
    }
    for (double& v : p) v /= sum;
    return p;
}

}  // namespace

std::array<double, kClassCount> LogisticModel::proba_scaled(std::span<const double> z) const {
    if (z.size() != weights[0].size())
        throw Error::data("logistic model dimension mismatch: row has " +
                          std::to_string(z.size()) + " features, model expects " +
                          std::to_string(weights[0].size()));
    std::array<double, kClassCount> logits{};
    for (int c = 0; c < kClassCount; ++c) {
        double dot = bias[c];
        for (std::size_t j = 0; j < z.size(); ++j) dot += weights[c][j] * z[j];
        logits[c] = dot;
    }
    return softmax(logits);
}

std::array<double, kClassCount> LogisticModel::predict_proba(std::span<const double> x) const {
    return proba_scaled(scaler.transform_row(x));
}

std::pair<double, LogisticGradients> loss_and_gradient(const LogisticModel& model,
                                                       const DesignMatrix& batch) {
    validate_matrix(batch);
    if (batch.size() == 0) throw Error::data("loss needs a non-empty batch");
    const std::size_t d = model.weights[0].size();
    if (batch.dim() != d)
        throw Error::data("batch dimension " + std::to_string(batch.dim()) +
                          " does not match model dimension " + std::to_string(d));

    LogisticGradients grad;
    for (int c = 0; c < kClassCount; ++c) grad.weights[c].assign(d, 0.0);

    double loss = 0.0;
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto& x = batch.rows[i];
        const int y = label_index(batch.labels[i]);
        const double w =
            model.config.class_weights ? model.config.class_weights->of(batch.labels[i]) : 1.0;
        weight_sum += w;

        const auto p = model.proba_scaled(x);
        loss -= w * std::log(p[y]);

        for (int c = 0; c < kClassCount; ++c) {
            const double delta = w * (p[c] - (c == y ? 1.0 : 0.0));
            grad.bias[c] += delta;
            for (std::size_t j = 0; j < d; ++j) grad.weights[c][j] += delta * x[j];
        }
    }

    loss /= weight_sum;
    for (int c = 0; c < kClassCount; ++c) {
        grad.bias[c] /= weight_sum;
        for (std::size_t j = 0; j < d; ++j) grad.weights[c][j] /= weight_sum;
    }

    // L2 penalty on the weights only, never the bias.
    double penalty = 0.0;
    for (int c = 0; c < kClassCount; ++c)
        for (std::size_t j = 0; j < d; ++j) {
            penalty += model.weights[c][j] * model.weights[c][j];
            grad.weights[c][j] += model.config.l2 * model.weights[c][j];
        }
    loss += 0.5 * model.config.l2 * penalty;

    return {loss, std::move(grad)};
}

LogisticModel fit_logistic(const DesignMatrix& train, const LogisticConfig& config) {
    validate_matrix(train);
    if (config.learning_rate <= 0.0) throw Error::usage("learning rate must be positive");
    if (config.epochs < 0) throw Error::usage("epochs must be non-negative");

    const auto counts = class_counts(train.labels);
    for (int c = 0; c < kClassCount; ++c)
        if (counts[c] == 0)
            throw Error::training("logistic fit needs every class present; '" +
                                  std::string(label_name(static_cast<StrengthLabel>(c))) +
                                  "' is missing");

    LogisticModel model;
    model.config = config;
    model.scaler = config.standardize ? fit_scaler(train) : ScalerParams::identity(train.dim());
    const DesignMatrix scaled = transform(model.scaler, train);

    for (int c = 0; c < kClassCount; ++c) model.weights[c].assign(train.dim(), 0.0);

    // loss_history[e] is the loss at the parameters after e updates, so the
    // last entry is the final training loss.
    model.loss_history.reserve(static_cast<std::size_t>(config.epochs) + 1);
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        auto [loss, grad] = loss_and_gradient(model, scaled);
        if (!std::isfinite(loss))
            throw Error::training("logistic training diverged at epoch " + std::to_string(epoch));
        model.loss_history.push_back(loss);
        for (int c = 0; c < kClassCount; ++c) {
            model.bias[c] -= config.learning_rate * grad.bias[c];
            for (std::size_t j = 0; j < train.dim(); ++j)
                model.weights[c][j] -= config.learning_rate * grad.weights[c][j];
        }
    }
    const double final_loss = loss_and_gradient(model, scaled).first;
    if (!std::isfinite(final_loss))
        throw Error::training("logistic training diverged at epoch " +
                              std::to_string(config.epochs));
    model.loss_history.push_back(final_loss);
    return model;
}

}  // namespace pwss
