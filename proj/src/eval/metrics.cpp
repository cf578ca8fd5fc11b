#include "sicck/eval/metrics.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"
#include "sicck/kernels/kernels.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <unordered_map>

namespace sicck::eval {

using json = nlohmann::ordered_json;

Average parse_average(std::string_view text) {
    const std::string key = ascii_lower(trim(text));
    if (key == "macro") return Average::Macro;
    if (key == "weighted") return Average::Weighted;
    throw ConfigError(fmt::format("unknown average mode '{}'", text));
}

SliceAxis parse_slice_axis(std::string_view text) {
    const std::string key = ascii_lower(trim(text));
    if (key == "modifier_type" || key == "modifiertype" || key == "type") return SliceAxis::ModifierType;
    if (key == "slot" || key == "svo") return SliceAxis::Slot;
    throw ConfigError(fmt::format("unknown slice axis '{}'", text));
}

MetricReport score(const std::vector<CompressedLabel>& gold, const std::vector<CompressedLabel>& pred,
                   Average average) {
    if (gold.size() != pred.size()) {
        throw AlignmentError(fmt::format("{} gold labels but {} predictions", gold.size(), pred.size()));
    }
    constexpr std::size_t C = kAllCompressedLabels.size();
    std::vector<std::uint8_t> g(gold.size()), p(pred.size());
    for (std::size_t i = 0; i < gold.size(); ++i) {
        g[i] = static_cast<std::uint8_t>(gold[i]);
        p[i] = static_cast<std::uint8_t>(pred[i]);
    }
    std::vector<std::uint64_t> m(C * C, 0);
    kernels::confusion_counts(g, p, C, m);

    MetricReport r;
    r.total = gold.size();
    for (std::size_t c = 0; c < C; ++c) r.correct += m[c * C + c];
    r.accuracy = r.total == 0 ? 0.0 : static_cast<double>(r.correct) / static_cast<double>(r.total);

    double weight_sum = 0.0;
    for (std::size_t c = 0; c < C; ++c) {
        std::uint64_t support = 0, predicted = 0;
        for (std::size_t o = 0; o < C; ++o) {
            support += m[c * C + o];
            predicted += m[o * C + c];
        }
        if (support == 0) continue;
        const double tp = static_cast<double>(m[c * C + c]);
        ClassMetrics cm;
        cm.support = support;
        cm.precision = predicted == 0 ? 0.0 : tp / static_cast<double>(predicted);
        cm.recall = tp / static_cast<double>(support);
        cm.f1 = cm.precision + cm.recall == 0.0 ? 0.0 : 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall);
        const double w = average == Average::Macro ? 1.0 : static_cast<double>(support);
        r.precision += w * cm.precision;
        r.recall += w * cm.recall;
        r.f1 += w * cm.f1;
        weight_sum += w;
        r.per_class[kAllCompressedLabels[c]] = cm;
    }
    if (weight_sum > 0.0) {
        r.precision /= weight_sum;
        r.recall /= weight_sum;
        r.f1 /= weight_sum;
    }
    return r;
}

namespace {

using PredIndex = std::unordered_map<std::string, const PredictionRecord*>;

PredIndex index_predictions(const std::vector<PredictionRecord>& preds) {
    PredIndex index;
    for (const auto& p : preds) {
        if (!index.emplace(p.id, &p).second) throw AlignmentError(fmt::format("duplicate prediction id '{}'", p.id));
    }
    return index;
}

// Scores `scope`; every scorable record must have a prediction.
MetricReport score_scope(const std::vector<const DatasetRecord*>& scope, const PredIndex& index, Average average) {
    std::vector<CompressedLabel> gold, pred;
    for (const auto* r : scope) {
        if (!r->gold_label) continue;
        const auto g = compress_gold_label(*r->gold_label);
        if (!g) continue;
        const auto it = index.find(r->id);
        if (it == index.end()) throw AlignmentError(fmt::format("no prediction for record '{}'", r->id));
        gold.push_back(*g);
        pred.push_back(derive_four_way(*it->second));
    }
    auto report = score(gold, pred, average);
    report.records = scope.size();
    return report;
}

}  // namespace

MetricReport slice_report(const std::vector<DatasetRecord>& records, const std::vector<PredictionRecord>& preds,
                          SliceAxis axis, Average average) {
    const auto index = index_predictions(preds);
    std::unordered_map<std::string, const DatasetRecord*> by_id;
    std::vector<const DatasetRecord*> all;
    for (const auto& r : records) {
        if (!by_id.emplace(r.id, &r).second) throw AlignmentError(fmt::format("duplicate record id '{}'", r.id));
        all.push_back(&r);
    }
    for (const auto& p : preds) {
        if (!by_id.contains(p.id)) throw AlignmentError(fmt::format("prediction '{}' has no record", p.id));
    }

    auto report = score_scope(all, index, average);
    auto add_slice = [&](std::string key, auto&& member) {
        std::vector<const DatasetRecord*> scope;
        for (const auto* r : all) {
            if (member(*r)) scope.push_back(r);
        }
        if (scope.empty()) return;
        auto slice = score_scope(scope, index, average);
        slice.key = std::move(key);
        report.slices.push_back(std::move(slice));
    };
    if (axis == SliceAxis::ModifierType) {
        for (ModifierGroup g : kAllModifierGroups) {
            add_slice(std::string(to_string(g)), [g](const DatasetRecord& r) {
                return !r.is_original() && r.modifier_type && group_of(*r.modifier_type) == g;
            });
        }
    } else {
        for (Slot s : kAllSlots) {
            add_slice(std::string(to_string(s)),
                      [s](const DatasetRecord& r) { return !r.is_original() && r.slots.contains(s); });
        }
    }
    return report;
}

MetricReport score_records(const std::vector<DatasetRecord>& records, const std::vector<PredictionRecord>& preds,
                           Average average) {
    const auto index = index_predictions(preds);
    std::vector<const DatasetRecord*> scope;
    for (const auto& r : records) {
        if (index.contains(r.id)) scope.push_back(&r);
    }
    return score_scope(scope, index, average);
}

namespace {

json to_json(const MetricReport& r) {
    json j;
    if (!r.key.empty()) j["key"] = r.key;
    j["f1"] = r.f1;
    j["precision"] = r.precision;
    j["recall"] = r.recall;
    j["accuracy"] = r.accuracy;
    j["total"] = r.total;
    j["correct"] = r.correct;
    j["records"] = r.records;
    json per = json::object();
    for (const auto& [label, cm] : r.per_class) {
        per[std::string(to_string(label))] = {
            {"precision", cm.precision}, {"recall", cm.recall}, {"f1", cm.f1}, {"support", cm.support}};
    }
    j["per_class"] = per;
    if (!r.slices.empty()) {
        json slices = json::array();
        for (const auto& s : r.slices) slices.push_back(to_json(s));
        j["slices"] = slices;
    }
    return j;
}

}  // namespace

std::string report_to_json(const MetricReport& report) { return to_json(report).dump(2) + "\n"; }

std::string report_to_text(const MetricReport& report, std::string_view title) {
    std::string out = fmt::format("{}\n", title);
    out += fmt::format("{:<18} {:>8} {:>10} {:>8} {:>9} {:>8} {:>8}\n", "scope", "F1", "Precision", "Recall",
                       "Accuracy", "scored", "records");
    auto row = [&](std::string_view name, const MetricReport& r) {
        out += fmt::format("{:<18} {:>8.4f} {:>10.4f} {:>8.4f} {:>9.4f} {:>8} {:>8}\n", name, r.f1, r.precision, r.recall,
                           r.accuracy, r.total, r.records);
    };
    row("overall", report);
    for (const auto& s : report.slices) row(s.key, s);
    return out;
}

}  // namespace sicck::eval
