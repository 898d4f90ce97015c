#include <algorithm>
#include <cmath>
#include <numeric>

#include "pwss/dataset.hpp"
#include "pwss/error.hpp"
#include "pwss/model.hpp"
#include "pwss/rng.hpp"
#include "pwss/strength.hpp"

namespace pwss {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::usage: return "usage";
        case ErrorKind::data: return "data";
        case ErrorKind::training: return "training";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

std::string_view to_string(ModelFileDefect defect) {
    switch (defect) {
        case ModelFileDefect::bad_magic: return "bad_magic";
        case ModelFileDefect::bad_version: return "bad_version";
        case ModelFileDefect::unknown_tag: return "unknown_tag";
        case ModelFileDefect::truncated: return "truncated";
        case ModelFileDefect::bad_payload_size: return "bad_payload_size";
        case ModelFileDefect::checksum_mismatch: return "checksum_mismatch";
    }
    return "unknown";
}

StrengthLabel label_from_index(long long index) {
    if (index < 0 || index >= kClassCount)
        throw Error::data("strength label index out of range: " + std::to_string(index));
    return static_cast<StrengthLabel>(index);
}

std::string_view label_name(StrengthLabel label) {
    switch (label) {
        case StrengthLabel::weak: return "weak";
        case StrengthLabel::medium: return "medium";
        case StrengthLabel::strong: return "strong";
    }
    return "unknown";
}

std::array<std::size_t, kClassCount> class_counts(std::span<const StrengthLabel> labels) {
    std::array<std::size_t, kClassCount> counts{};
    for (StrengthLabel label : labels) ++counts[label_index(label)];
    return counts;
}

void validate_matrix(const DesignMatrix& m) {
    if (m.rows.size() != m.labels.size())
        throw Error::data("design matrix rows and labels differ in length");
    const std::size_t dim = m.dim();
    for (const auto& row : m.rows)
        if (row.size() != dim) throw Error::data("design matrix has ragged rows");
}

std::uint64_t substream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t state = seed;
    for (std::uint64_t id : ids) {
        SplitMix64 mixer(state ^ (id + 0x9E3779B97F4A7C15ull));
        state = mixer.next();
    }
    return state;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    shuffle(indices, rng);
    return indices;
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                    SplitMix64& rng) {
    if (k > n) throw Error::data("cannot sample more values than the population holds");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::size_t> drawn;
    drawn.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
        drawn.push_back(pool[i]);
    }
    return drawn;
}

std::string_view classifier_tag(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::logistic_regression: return "LR ";
        case ClassifierKind::naive_bayes: return "NB ";
        case ClassifierKind::decision_tree: return "DT ";
        case ClassifierKind::random_forest: return "RF ";
        case ClassifierKind::gradient_boosting: return "XGB";
    }
    throw Error::data("unknown classifier kind");
}

ClassifierKind classifier_from_tag(std::string_view tag) {
    std::string normalized;
    for (char c : tag) {
        if (c == ' ') continue;
        normalized.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : c);
    }
    if (normalized == "LR") return ClassifierKind::logistic_regression;
    if (normalized == "NB") return ClassifierKind::naive_bayes;
    if (normalized == "DT") return ClassifierKind::decision_tree;
    if (normalized == "RF") return ClassifierKind::random_forest;
    if (normalized == "XGB") return ClassifierKind::gradient_boosting;
    throw Error::data("unknown classifier tag: " + std::string(tag));
}

int argmax_class(const std::array<double, kClassCount>& scores) {
    int best = 0;
    for (int c = 1; c < kClassCount; ++c)
        if (scores[c] > scores[best]) best = c;
    return best;
}

StrengthLabel TrainedModel::predict(std::span<const double> x) const {
    return static_cast<StrengthLabel>(argmax_class(predict_proba(x)));
}

}  // namespace pwss
