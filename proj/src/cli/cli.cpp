#include "sicck/cli/cli.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/lexicon.hpp"
#include "sicck/core/seeds.hpp"
#include "sicck/core/text.hpp"
#include "sicck/dataset/build.hpp"
#include "sicck/dataset/jsonl.hpp"
#include "sicck/eval/compress.hpp"
#include "sicck/eval/folds.hpp"
#include "sicck/eval/metrics.hpp"
#include "sicck/natlog/annotate.hpp"
#include "sicck/natlog/join.hpp"
#include "sicck/parser/svo.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#ifndef SICCK_DATA_DIR
#define SICCK_DATA_DIR "data"
#endif

namespace sicck::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSplitSeed = 13;

struct Options {
    std::string data_dir = SICCK_DATA_DIR;

    // inputs and outputs
    std::string in;
    std::string out;
    std::string manifest;
    std::string columns;
    std::string gold;
    std::string pred;

    // parse / annotate
    std::vector<std::string> sentences;
    std::string premise;
    std::string hypothesis;
    std::string seed_relation = "Independence";
    int seed = 0;
    bool detail = false;

    // generate
    std::vector<int> seed_ids;
    bool no_originals = false;
    int max_entities = 4;
    std::size_t max_worlds = 4'000'000;

    // compress / score / slice / split
    bool per_record = false;
    std::string average = "macro";
    std::string format = "json";
    std::string axis = "modifier_type";
    std::size_t k = 5;
    std::uint64_t split_seed = kDefaultSplitSeed;
    int max_universe = 8;
};

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << bytes;
    } else {
        write_file(path, bytes);
    }
}

natlog::AnnotateOptions annotate_options(const Options& o) {
    natlog::AnnotateOptions a;
    a.max_entities = o.max_entities;
    a.max_worlds = o.max_worlds;
    return a;
}

std::vector<DatasetRecord> load_records(const std::string& path, const Options& o) {
    std::optional<SeedTable> seeds;
    const std::string ext = ascii_lower(fs::path(path).extension().string());
    if (ext == ".csv" || ext == ".tsv") seeds = SeedTable::load(fs::path(o.data_dir) / "seeds.tsv");
    return dataset::ingest_dataset(path, o.columns, seeds ? &*seeds : nullptr).records;
}

json span_json(const parser::SvoSentence& s, parser::TokenSpan span) {
    return {{"text", s.text(span)}, {"begin", span.begin}, {"end", span.end}};
}

void cmd_parse(const Options& o, std::ostream& out) {
    const auto grammar = parser::Grammar::load(o.data_dir);
    std::vector<std::string> lines = o.sentences;
    if (!o.in.empty()) {
        const auto text = read_file(o.in);
        for (auto line : split_lines(text)) {
            if (!trim(line).empty()) lines.emplace_back(trim(line));
        }
    }
    std::string buf;
    for (const auto& line : lines) {
        const auto s = parser::parse_sentence(line, grammar);
        json j;
        j["sentence"] = s.render();
        j["subject"] = span_json(s, s.subject.span);
        j["determiner"] = s.text({s.subject.span.begin, s.subject.determiner_end});
        j["verb"] = span_json(s, s.verb);
        j["head_verb"] = s.head_verb ? json(s.original[*s.head_verb]) : json(nullptr);
        j["object"] = s.object ? span_json(s, s.object->span) : json(nullptr);
        j["object_preposition"] = s.object_preposition ? json(s.original[*s.object_preposition]) : json(nullptr);
        buf += j.dump() + "\n";
    }
    emit(o.out, buf, out);
}

void cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto grammar = parser::Grammar::load(o.data_dir);
    const auto lexicon = Lexicon::load(fs::path(o.data_dir) / "modifiers.tsv");
    const auto seeds = SeedTable::load(fs::path(o.data_dir) / "seeds.tsv");
    dataset::BuildOptions b;
    b.seed_ids = o.seed_ids;
    b.include_originals = !o.no_originals;
    b.annotate = annotate_options(o);
    const auto corpus = dataset::build_dataset(seeds, lexicon, grammar, b);
    emit(o.out, dataset::serialize_records(corpus.records), out);
    if (!o.manifest.empty()) write_file(o.manifest, dataset::manifest_to_json(corpus.manifest));
    fmt::print(err, "generated {} records ({} duplicates removed, {} oracle fallbacks)\n", corpus.records.size(),
               corpus.manifest.generation->duplicates_removed, corpus.manifest.generation->fallbacks);
}

void cmd_annotate(const Options& o, std::ostream& out) {
    const auto grammar = parser::Grammar::load(o.data_dir);
    const auto lexicon = Lexicon::load(fs::path(o.data_dir) / "modifiers.tsv");
    Relation seed_relation = parse_relation(o.seed_relation);
    if (o.seed != 0) seed_relation = SeedTable::load(fs::path(o.data_dir) / "seeds.tsv").at(o.seed).relation;

    struct Pair {
        std::string premise, hypothesis;
        Relation relation;
    };
    std::vector<Pair> pairs;
    if (!o.premise.empty() || !o.hypothesis.empty()) pairs.push_back({o.premise, o.hypothesis, seed_relation});
    if (!o.in.empty()) {
        const auto text = read_file(o.in);
        std::size_t lineno = 0;
        for (auto line : split_lines(text)) {
            ++lineno;
            if (trim(line).empty() || line.front() == '#') continue;
            const auto cols = split(line, '\t');
            if (cols.size() != 2 && cols.size() != 3) {
                throw ConfigError(fmt::format("{}:{}: expected premise<TAB>hypothesis[<TAB>seed relation]", o.in, lineno));
            }
            pairs.push_back({std::string(trim(cols[0])), std::string(trim(cols[1])),
                             cols.size() == 3 ? parse_relation(cols[2]) : seed_relation});
        }
    }
    const auto options = annotate_options(o);
    std::string buf;
    for (const auto& p : pairs) {
        const auto a = natlog::annotate_detailed(parser::parse_sentence(p.premise, grammar),
                                                 parser::parse_sentence(p.hypothesis, grammar), p.relation, lexicon,
                                                 options);
        if (o.detail) {
            buf += fmt::format("{}\t{}\t{}\t{}\t{}\n", to_string(a.relation), p.premise, p.hypothesis,
                               a.fallback ? "fallback" : "decided", a.fallback ? a.note : std::to_string(a.worlds));
        } else {
            buf += fmt::format("{}\n", to_string(a.relation));
        }
    }
    emit(o.out, buf, out);
}

void cmd_ingest(const Options& o, std::ostream& out) {
    const auto records = load_records(o.in, o);
    emit(o.out, dataset::serialize_records(records), out);
    if (!o.manifest.empty()) write_file(o.manifest, dataset::manifest_to_json(dataset::compute_stats(records)));
}

void cmd_stats(const Options& o, std::ostream& out) {
    emit(o.out, dataset::manifest_to_json(dataset::compute_stats(load_records(o.in, o))), out);
}

void cmd_compress(const Options& o, std::ostream& out) {
    const auto records = load_records(o.in, o);
    std::map<std::string, std::size_t> counts;
    for (auto c : kAllCompressedLabels) counts[std::string(to_string(c))] = 0;
    counts["Excluded"] = 0;
    counts["unlabeled"] = 0;
    std::string rows;
    for (const auto& r : records) {
        std::string label = "unlabeled";
        if (r.gold_label) {
            const auto c = eval::compress_gold_label(*r.gold_label);
            label = c ? std::string(to_string(*c)) : "Excluded";
        }
        ++counts[label];
        rows += fmt::format("{}\t{}\t{}\n", r.id, r.gold_label ? to_string(*r.gold_label) : "-", label);
    }
    if (o.per_record) {
        emit(o.out, rows, out);
        return;
    }
    json j;
    for (auto c : kAllCompressedLabels) j[std::string(to_string(c))] = counts[std::string(to_string(c))];
    j["Excluded"] = counts["Excluded"];
    j["unlabeled"] = counts["unlabeled"];
    j["records"] = records.size();
    emit(o.out, j.dump(2) + "\n", out);
}

std::string render_report(const eval::MetricReport& r, const Options& o, std::string_view title) {
    if (o.format == "text") return eval::report_to_text(r, title);
    return eval::report_to_json(r);
}

void cmd_score(const Options& o, std::ostream& out) {
    const auto records = load_records(o.gold, o);
    const auto preds = eval::parse_predictions(read_file(o.pred));
    const auto report = eval::score_records(records, preds, eval::parse_average(o.average));
    emit(o.out, render_report(report, o, "Overall scores, compressed 4-way labels"), out);
}

void cmd_slice(const Options& o, std::ostream& out) {
    const auto records = load_records(o.gold, o);
    const auto preds = eval::parse_predictions(read_file(o.pred));
    const auto axis = eval::parse_slice_axis(o.axis);
    const auto report = eval::slice_report(records, preds, axis, eval::parse_average(o.average));
    const auto title = axis == eval::SliceAxis::ModifierType ? "Scores by modifier type" : "Scores by modified slot";
    emit(o.out, render_report(report, o, title), out);
}

void cmd_split(const Options& o, std::ostream& out, std::ostream& err) {
    const auto records = load_records(o.in, o);
    std::vector<std::string> ids;
    ids.reserve(records.size());
    for (const auto& r : records) ids.push_back(r.id);
    fmt::print(err, "splitting {} records into {} folds with seed {}\n", ids.size(), o.k, o.split_seed);
    emit(o.out, eval::serialize_folds(eval::make_folds(ids, o.k, o.split_seed)), out);
}

void cmd_join_table(const Options& o, std::ostream& out) {
    std::string path = o.out;
    if (path.empty()) path = (fs::path(o.data_dir) / "join_table.txt").string();
    emit(path, natlog::JoinTable::compute(o.max_universe).serialize(), out);
}

void add_model_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--max-entities", o.max_entities, "Largest domain the oracle enumerates")
        ->capture_default_str()
        ->check(CLI::Range(1, 6));
    cmd->add_option("--max-worlds", o.max_worlds, "Oracle budget in worlds before falling back to Independence")
        ->capture_default_str();
}

void add_columns_flag(CLI::App* cmd, Options& o) {
    cmd->add_option("--columns", o.columns, "Column mapping for .csv/.tsv input")->check(CLI::ExistingFile);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Compositional NLI dataset forge and evaluation harness", "sicck"};
    app.require_subcommand(1, 1);
    app.add_option("--data-dir", o.data_dir, "Directory with the lexicons and seed table")
        ->capture_default_str()
        ->check(CLI::ExistingDirectory);

    auto* parse = app.add_subcommand("parse", "Print subject, verb and object spans as JSON lines");
    parse->add_option("--sentence", o.sentences, "Sentence to parse (repeatable)");
    parse->add_option("--in", o.in, "File with one sentence per line")->check(CLI::ExistingFile);
    parse->add_option("--out", o.out, "Output file (default stdout)");

    auto* generate = app.add_subcommand("generate", "Build the labelled corpus from the seed pairs");
    generate->add_option("--out", o.out, "dataset.jsonl (default stdout)");
    generate->add_option("--manifest", o.manifest, "Write manifest.json here");
    generate->add_option("--seeds", o.seed_ids, "Seed ids to expand (default all)")->delimiter(',');
    generate->add_flag("--no-originals", o.no_originals, "Leave out the unmodified seed pairs");
    add_model_flags(generate, o);

    auto* annotate = app.add_subcommand("annotate", "Label premise/hypothesis pairs with the relation oracle");
    annotate->add_option("--premise", o.premise, "Premise sentence");
    annotate->add_option("--hypothesis", o.hypothesis, "Hypothesis sentence");
    annotate->add_option("--seed-relation", o.seed_relation, "Relation of the unmodified pair")->capture_default_str();
    annotate->add_option("--seed", o.seed, "Take the seed relation from this seed id");
    annotate->add_option("--in", o.in, "TSV: premise, hypothesis[, seed relation]")->check(CLI::ExistingFile);
    annotate->add_option("--out", o.out, "Output file (default stdout)");
    annotate->add_flag("--detail", o.detail, "Also print the pair and whether the oracle fell back");
    add_model_flags(annotate, o);

    auto* ingest = app.add_subcommand("ingest", "Validate a dataset file and rewrite it canonically");
    ingest->add_option("--in", o.in, "dataset.jsonl, or .csv/.tsv with --columns")->required()->check(CLI::ExistingFile);
    ingest->add_option("--out", o.out, "Canonical JSONL (default stdout)");
    ingest->add_option("--manifest", o.manifest, "Write manifest.json here");
    add_columns_flag(ingest, o);

    auto* stats = app.add_subcommand("stats", "Print the corpus manifest");
    stats->add_option("--in", o.in, "Dataset file")->required()->check(CLI::ExistingFile);
    stats->add_option("--out", o.out, "Output file (default stdout)");
    add_columns_flag(stats, o);

    auto* compress = app.add_subcommand("compress", "Map gold labels to the four scored classes");
    compress->add_option("--in", o.in, "Dataset file")->required()->check(CLI::ExistingFile);
    compress->add_option("--out", o.out, "Output file (default stdout)");
    compress->add_flag("--per-record", o.per_record, "One id/gold/compressed line per record instead of totals");
    add_columns_flag(compress, o);

    auto* score = app.add_subcommand("score", "Score predictions against gold labels");
    auto* slice = app.add_subcommand("slice", "Score predictions per modifier type or per slot");
    for (auto* cmd : {score, slice}) {
        cmd->add_option("--gold", o.gold, "Dataset file with gold labels")->required()->check(CLI::ExistingFile);
        cmd->add_option("--pred", o.pred, "Prediction JSONL")->required()->check(CLI::ExistingFile);
        cmd->add_option("--average", o.average, "macro or weighted")
            ->capture_default_str()
            ->check(CLI::IsMember({"macro", "weighted"}));
        cmd->add_option("--format", o.format, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", o.out, "Output file (default stdout)");
        add_columns_flag(cmd, o);
    }
    slice->add_option("--axis", o.axis, "modifier_type or slot")
        ->capture_default_str()
        ->check(CLI::IsMember({"modifier_type", "slot"}));

    auto* split = app.add_subcommand("split", "Deterministic k-fold partition of record ids");
    split->add_option("--in", o.in, "Dataset file")->required()->check(CLI::ExistingFile);
    split->add_option("--k", o.k, "Fold count")->capture_default_str();
    split->add_option("--seed", o.split_seed, "Shuffle seed")->capture_default_str();
    split->add_option("--out", o.out, "fold<TAB>id lines (default stdout)");
    add_columns_flag(split, o);

    auto* join = app.add_subcommand("regen-join-table", "Recompute the relation join table");
    join->add_option("--out", o.out, "Output path (default <data-dir>/join_table.txt, '-' for stdout)");
    join->add_option("--max-universe", o.max_universe, "Largest universe enumerated")
        ->capture_default_str()
        ->check(CLI::Range(1, 8));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return 2;
    }

    try {
        if (*parse) cmd_parse(o, out);
        else if (*generate) cmd_generate(o, out, err);
        else if (*annotate) cmd_annotate(o, out);
        else if (*ingest) cmd_ingest(o, out);
        else if (*stats) cmd_stats(o, out);
        else if (*compress) cmd_compress(o, out);
        else if (*score) cmd_score(o, out);
        else if (*slice) cmd_slice(o, out);
        else if (*split) cmd_split(o, out, err);
        else if (*join) cmd_join_table(o, out);
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& row : e.rows()) err << "  line " << row.line << ": " << row.message << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sicck::cli
