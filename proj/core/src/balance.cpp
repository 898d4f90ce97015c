#include "pwss/balance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pwss/error.hpp"
#include "pwss/rng.hpp"

namespace pwss {

ScalerParams ScalerParams::identity(std::size_t dim) {
    ScalerParams p;
    p.mean.assign(dim, 0.0);
    p.stdev.assign(dim, 1.0);
    return p;
}

std::vector<double> ScalerParams::transform_row(std::span<const double> x) const {
    if (x.size() != mean.size())
        throw Error::data("scaler dimension mismatch: row has " + std::to_string(x.size()) +
                          " features, scaler expects " + std::to_string(mean.size()));
    std::vector<double> z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double centered = x[j] - mean[j];
        z[j] = stdev[j] > 0.0 ? centered / stdev[j] : centered;
    }
    return z;
}

ScalerParams fit_scaler(const DesignMatrix& m) {
    validate_matrix(m);
    if (m.size() < 2) throw Error::data("scaler needs at least 2 rows to fit");

    const std::size_t n = m.size();
    const std::size_t d = m.dim();
    ScalerParams p;
    p.mean.assign(d, 0.0);
    p.stdev.assign(d, 0.0);

    for (const auto& row : m.rows)
        for (std::size_t j = 0; j < d; ++j) p.mean[j] += row[j];
    for (std::size_t j = 0; j < d; ++j) p.mean[j] /= static_cast<double>(n);

    for (const auto& row : m.rows)
        for (std::size_t j = 0; j < d; ++j) {
            const double dev = row[j] - p.mean[j];
            p.stdev[j] += dev * dev;
        }
    for (std::size_t j = 0; j < d; ++j)
        p.stdev[j] = std::sqrt(p.stdev[j] / static_cast<double>(n));
    return p;
}

DesignMatrix transform(const ScalerParams& p, const DesignMatrix& m) {
    validate_matrix(m);
    DesignMatrix out;
    out.labels = m.labels;
    out.rows.reserve(m.size());
    for (const auto& row : m.rows) out.rows.push_back(p.transform_row(row));
    return out;
}

std::vector<double> inverse_transform_row(const ScalerParams& p, std::span<const double> z) {
    if (z.size() != p.mean.size()) throw Error::data("scaler dimension mismatch on inverse");
    std::vector<double> x(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        x[j] = p.stdev[j] > 0.0 ? z[j] * p.stdev[j] + p.mean[j] : z[j] + p.mean[j];
    }
    return x;
}

ClassWeights class_weights(std::span<const StrengthLabel> labels) {
    const auto counts = class_counts(labels);
    const double n = static_cast<double>(labels.size());
    ClassWeights weights;
    for (int c = 0; c < kClassCount; ++c) {
        if (counts[c] == 0)
            throw Error::data("class weights need every class present; '" +
                              std::string(label_name(static_cast<StrengthLabel>(c))) +
                              "' is missing");
        weights.weight[c] = n / (static_cast<double>(kClassCount) *
                                 static_cast<double>(counts[c]));
    }
    return weights;
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        sum += d * d;
    }
    return sum;
}

// Indices (into `members`) of the k nearest neighbours of members[self],
// excluding self; ties broken by lower index.
std::vector<std::size_t> k_nearest(const std::vector<std::span<const double>>& members,
                                   std::size_t self, int k) {
    std::vector<std::pair<double, std::size_t>> by_distance;
    by_distance.reserve(members.size() - 1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i == self) continue;
        by_distance.emplace_back(squared_distance(members[self], members[i]), i);
    }
    std::sort(by_distance.begin(), by_distance.end());
    by_distance.resize(static_cast<std::size_t>(k));
    std::vector<std::size_t> out;
    out.reserve(by_distance.size());
    for (const auto& [dist, idx] : by_distance) out.push_back(idx);
    return out;
}

}  // namespace

DesignMatrix smote(const DesignMatrix& m, int k, std::uint64_t seed) {
    validate_matrix(m);
    if (k < 1) throw Error::data("smote needs k >= 1");

    const auto counts = class_counts(m.labels);
    const std::size_t majority = *std::max_element(counts.begin(), counts.end());
    if (std::all_of(counts.begin(), counts.end(),
                    [&](std::size_t c) { return c == 0 || c == majority; }))
        return m;

    DesignMatrix out = m;
    for (int c = 0; c < kClassCount; ++c) {
        const std::size_t n_c = counts[c];
        if (n_c == 0 || n_c == majority) continue;
        if (n_c <= static_cast<std::size_t>(k))
            throw Error::data("smote neighbourhood needs class size > k; class '" +
                              std::string(label_name(static_cast<StrengthLabel>(c))) +
                              "' has " + std::to_string(n_c) + " members");

        // Neighbourhoods are computed over the original rows only.
        std::vector<std::span<const double>> members;
        members.reserve(n_c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (label_index(m.labels[i]) == c) members.emplace_back(m.rows[i]);

        std::vector<std::vector<std::size_t>> neighbours(n_c);
        const std::size_t to_make = majority - n_c;
        for (std::size_t s = 0; s < to_make; ++s) {
            SplitMix64 rng(substream(seed, {static_cast<std::uint64_t>(c), s}));
            const std::size_t parent = static_cast<std::size_t>(rng.below(n_c));
            if (neighbours[parent].empty())
                neighbours[parent] = k_nearest(members, parent, k);
            const std::size_t nn =
                neighbours[parent][static_cast<std::size_t>(rng.below(neighbours[parent].size()))];
            const double u = rng.unit();

            std::vector<double> point(m.dim());
            for (std::size_t j = 0; j < point.size(); ++j)
                point[j] = members[parent][j] + u * (members[nn][j] - members[parent][j]);
            out.rows.push_back(std::move(point));
            out.labels.push_back(static_cast<StrengthLabel>(c));
        }
    }
    return out;
}

}  // namespace pwss
