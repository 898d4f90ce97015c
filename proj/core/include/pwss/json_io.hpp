#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "pwss/adversarial.hpp"
#include "pwss/corpus.hpp"
#include "pwss/eval.hpp"
#include "pwss/trees.hpp"

namespace pwss {

// Report payloads in the stable key order the CLI emits. ordered_json
// keeps insertion order, so identical inputs serialize to identical bytes.
using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const IngestStats& stats);
OrderedJson to_json(const ClassificationReport& report);
OrderedJson to_json(const ConfusionMatrix& cm);
OrderedJson to_json(const CrossValidationResult& result);
OrderedJson to_json(const LearningCurvePoint& point);
OrderedJson to_json(std::span<const LearningCurvePoint> curve);
OrderedJson to_json(const RobustnessReport& report);
OrderedJson to_json(const GridResult& result);
OrderedJson to_json(const AttackPolicy& policy);

/// Rules as "from:to" pairs plus the counts and seed; inverse of to_json.
AttackPolicy attack_policy_from_json(const nlohmann::json& j);

/// Tab-separated learning-curve table for external plotting.
void write_curve_table(std::ostream& out, std::span<const LearningCurvePoint> curve);

/// Tab-separated grid-search table.
void write_grid_table(std::ostream& out, const GridResult& result);

}  // namespace pwss
