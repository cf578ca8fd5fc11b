#pragma once

#include "sicck/core/labels.hpp"
#include "sicck/core/record.hpp"
#include "sicck/eval/compress.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::eval {

enum class Average : std::uint8_t { Macro, Weighted };
Average parse_average(std::string_view text);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;  // gold count
};

struct MetricReport {
    std::string key;          // slice value ("universal", "subject", ...); empty for the overall report
    double f1 = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double accuracy = 0.0;
    std::size_t total = 0;    // scored pairs
    std::size_t correct = 0;
    std::size_t records = 0;  // records in scope, including unlabeled and excluded ones
    std::map<CompressedLabel, ClassMetrics> per_class;  // only classes with gold support
    std::vector<MetricReport> slices;  // in axis order
};

/// Averages run over the classes present in gold. A class that is never predicted has precision 0,
/// and F1 is 0 when precision and recall are both 0. Throws AlignmentError on a length mismatch.
MetricReport score(const std::vector<CompressedLabel>& gold, const std::vector<CompressedLabel>& pred,
                   Average average = Average::Macro);

enum class SliceAxis : std::uint8_t { ModifierType, Slot };
SliceAxis parse_slice_axis(std::string_view text);

/// Joins predictions to records by id, scores every labelled, non-excluded record, and adds one
/// slice per axis value that has records (a two-slot record sits in both slot slices).
/// Throws AlignmentError for a prediction id with no record, a duplicate id, or a scored record
/// without a prediction.
MetricReport slice_report(const std::vector<DatasetRecord>& records, const std::vector<PredictionRecord>& preds,
                          SliceAxis axis, Average average = Average::Macro);

/// Scores the records that have a prediction; the records need not cover the same ids.
MetricReport score_records(const std::vector<DatasetRecord>& records, const std::vector<PredictionRecord>& preds,
                           Average average = Average::Macro);

std::string report_to_json(const MetricReport& report);
/// Aligned table: one row for the overall scores, one per slice.
std::string report_to_text(const MetricReport& report, std::string_view title);

}  // namespace sicck::eval
