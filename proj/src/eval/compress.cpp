#include "sicck/eval/compress.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace sicck::eval {

using json = nlohmann::ordered_json;

std::optional<CompressedLabel> compress_gold_label(const GoldLabel& gold) noexcept {
    if (const auto* amb = std::get_if<AmbiguousLabel>(&gold)) {
        if (*amb == AmbiguousLabel::negation_or_alternation()) return CompressedLabel::Contradiction;
        return std::nullopt;
    }
    switch (std::get<Relation>(gold)) {
        case Relation::ForwardEntailment: return CompressedLabel::ForwardEntailment;
        case Relation::ReverseEntailment: return CompressedLabel::ReverseEntailment;
        case Relation::Negation:
        case Relation::Alternation: return CompressedLabel::Contradiction;
        case Relation::Cover:
        case Relation::Independence: return CompressedLabel::Neutral;
        case Relation::Equivalence: return std::nullopt;
    }
    return std::nullopt;
}

NliLabel top_label(const std::array<double, 3>& scores) noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) best = i;
    }
    return kAllNliLabels[best];
}

CompressedLabel derive_four_way(const PredictionRecord& pred) {
    switch (pred.forward_label) {
        case NliLabel::Entailment: return CompressedLabel::ForwardEntailment;
        case NliLabel::Contradiction: return CompressedLabel::Contradiction;
        case NliLabel::Neutral: break;
    }
    if (!pred.reverse_label) throw MissingReversePrediction(fmt::format("{}: Neutral without a reverse prediction", pred.id));
    return *pred.reverse_label == NliLabel::Entailment ? CompressedLabel::ReverseEntailment : CompressedLabel::Neutral;
}

namespace {

constexpr const char* kKeys[] = {"id", "forward_label", "reverse_label", "forward_scores"};

PredictionRecord from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("line is not a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            throw ConfigError(fmt::format("unknown field '{}'", key));
        }
    }
    PredictionRecord p;
    const auto id = j.find("id");
    if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) throw ConfigError("missing or empty 'id'");
    p.id = id->get<std::string>();
    const auto fwd = j.find("forward_label");
    if (fwd == j.end() || !fwd->is_string()) throw ConfigError("missing 'forward_label'");
    p.forward_label = parse_nli_label(fwd->get<std::string>());
    if (const auto rev = j.find("reverse_label"); rev != j.end() && !rev->is_null()) {
        if (!rev->is_string()) throw ConfigError("'reverse_label' must be a string");
        p.reverse_label = parse_nli_label(rev->get<std::string>());
    }
    if (const auto sc = j.find("forward_scores"); sc != j.end() && !sc->is_null()) {
        if (!sc->is_array() || sc->size() != 3) throw ConfigError("'forward_scores' must hold three numbers");
        std::array<double, 3> s{};
        double sum = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!(*sc)[i].is_number()) throw ConfigError("'forward_scores' must hold three numbers");
            s[i] = (*sc)[i].get<double>();
            if (!(s[i] >= 0.0)) throw ConfigError("negative score");
            sum += s[i];
        }
        if (std::abs(sum - 1.0) > 1e-6) throw ConfigError(fmt::format("scores sum to {}, not 1", sum));
        if (top_label(s) != p.forward_label) throw ConfigError("forward_label is not the top-scoring label");
        p.forward_scores = s;
    }
    if (p.forward_label == NliLabel::Neutral && !p.reverse_label) {
        throw ConfigError("Neutral forward label needs 'reverse_label'");
    }
    return p;
}

}  // namespace

std::vector<PredictionRecord> parse_predictions(std::string_view text) {
    std::vector<PredictionRecord> out;
    std::vector<RowError> errors;
    std::size_t lineno = 0;
    for (auto line : split_lines(text)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            out.push_back(from_json(json::parse(line)));
        } catch (const LabelParseError& e) {
            throw LabelParseError(fmt::format("line {}: {}", lineno, e.what()));
        } catch (const json::exception& e) {
            errors.push_back({lineno, e.what()});
        } catch (const Error& e) {
            errors.push_back({lineno, e.what()});
        }
    }
    if (!errors.empty()) throw SchemaError(std::move(errors));
    return out;
}

std::string serialize_predictions(const std::vector<PredictionRecord>& preds) {
    std::string out;
    for (const auto& p : preds) {
        json j;
        j["id"] = p.id;
        j["forward_label"] = std::string(to_string(p.forward_label));
        if (p.reverse_label) j["reverse_label"] = std::string(to_string(*p.reverse_label));
        if (p.forward_scores) j["forward_scores"] = *p.forward_scores;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace sicck::eval
