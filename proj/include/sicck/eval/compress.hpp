#pragma once

#include "sicck/core/labels.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::eval {

/// Seven relations plus the two ambiguous labels down to the four scored classes. Equivalence and
/// Cover|FE return nullopt (excluded from scoring); Negation|Alternation maps to Contradiction.
std::optional<CompressedLabel> compress_gold_label(const GoldLabel& gold) noexcept;

/// One system output. forward_scores are probabilities in NliLabel order.
struct PredictionRecord {
    std::string id;
    NliLabel forward_label = NliLabel::Neutral;
    std::optional<NliLabel> reverse_label;
    std::optional<std::array<double, 3>> forward_scores;

    friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

/// Highest score; ties go to the earlier label in NliLabel order.
NliLabel top_label(const std::array<double, 3>& scores) noexcept;

/// Entailment -> FE, Contradiction -> Contradiction, Neutral -> RE if the reversed run says
/// Entailment, else Neutral. Throws MissingReversePrediction for Neutral without a reverse label.
CompressedLabel derive_four_way(const PredictionRecord& pred);

/// Line-delimited {id, forward_label, reverse_label?, forward_scores?}. Structural problems are
/// collected into SchemaError; label text that is not Entailment/Contradiction/Neutral raises
/// LabelParseError naming the line. Scores must be three non-negative numbers summing to 1 +- 1e-6
/// whose top label is forward_label; a Neutral forward label needs a reverse label.
std::vector<PredictionRecord> parse_predictions(std::string_view text);
std::string serialize_predictions(const std::vector<PredictionRecord>& preds);

}  // namespace sicck::eval
