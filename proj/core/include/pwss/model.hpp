#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "pwss/balance.hpp"
#include "pwss/strength.hpp"

namespace pwss {

enum class ClassifierKind {
    logistic_regression,
    naive_bayes,
    decision_tree,
    random_forest,
    gradient_boosting,
};

/// Three-letter tag used in model files and the CLI ("LR ", "NB ", "DT ",
/// "RF ", "XGB"; space padded).
std::string_view classifier_tag(ClassifierKind kind);

/// Accepts trimmed or padded tags, case-insensitive.
ClassifierKind classifier_from_tag(std::string_view tag);

/// Shared prediction contract of the five classifier variants. Inputs are
/// raw feature vectors; each model applies its own stored scaler before
/// scoring. Fitted models are immutable and safe to share across threads.
class TrainedModel {
public:
    virtual ~TrainedModel() = default;

    virtual ClassifierKind kind() const = 0;
    virtual std::size_t feature_dim() const = 0;
    virtual const ScalerParams& scaler_params() const = 0;

    /// Class probabilities summing to 1.
    virtual std::array<double, kClassCount> predict_proba(std::span<const double> x) const = 0;

    /// argmax of predict_proba, ties resolved to the lower class index.
    StrengthLabel predict(std::span<const double> x) const;
};

/// argmax with ties to the lower index; shared by every classifier.
int argmax_class(const std::array<double, kClassCount>& scores);

}  // namespace pwss
