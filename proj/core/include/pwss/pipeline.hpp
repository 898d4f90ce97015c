#pragma once

#include <cstdint>
#include <memory>

#include "pwss/bayes.hpp"
#include "pwss/corpus.hpp"
#include "pwss/features.hpp"
#include "pwss/linear.hpp"
#include "pwss/model.hpp"
#include "pwss/trees.hpp"

namespace pwss {

/// Feature rows for every record, labels carried over.
DesignMatrix to_design_matrix(const RecordSet& rs, const Wordlist& wl);

/// Balancing steps applied before fitting, in order: standardize (fit on
/// the incoming data), SMOTE on the scaled rows, class weights computed
/// on the post-SMOTE labels (weights only reach the classifiers that use
/// them, i.e. logistic regression).
struct TrainOptions {
    bool standardize = true;
    bool use_class_weights = false;
    bool use_smote = false;
    int smote_k = 5;
    std::uint64_t seed = 0;
};

struct ModelSpec {
    ClassifierKind kind = ClassifierKind::random_forest;
    LogisticConfig logistic;
    double nb_smoothing = 1e-9;
    TreeConfig tree;
    ForestConfig forest;
    GBMConfig gbm;
    TrainOptions options;
};

/// Runs the balancing pipeline and fits the chosen classifier. The
/// returned model carries the fitted scaler (identity when standardize is
/// off) and predicts from raw feature vectors.
std::unique_ptr<TrainedModel> train_model(const ModelSpec& spec, const DesignMatrix& train);

}  // namespace pwss
