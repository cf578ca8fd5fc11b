#include "sicck/dataset/build.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"
#include "sicck/dataset/csv.hpp"
#include "sicck/dataset/jsonl.hpp"
#include "sicck/modify/engine.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <future>
#include <set>
#include <tuple>

namespace sicck::dataset {

namespace {

struct SeedOutput {
    std::vector<DatasetRecord> records;
    GenerationAudit audit;
};

std::string id_surface(std::string surface) {
    std::replace(surface.begin(), surface.end(), ' ', '_');
    return surface;
}

SeedOutput build_seed(const SeedPair& seed, const Lexicon& lexicon, const parser::Grammar& grammar,
                      const BuildOptions& options) {
    SeedOutput out;
    const auto premise = parser::parse_sentence(seed.premise, grammar);
    const auto hypothesis = parser::parse_sentence(seed.hypothesis, grammar);
    const auto requests = modify::enumerate_combinations(premise, hypothesis, lexicon);
    out.audit.requests = requests.size();
    for (const auto& req : requests) {
        for (const auto& v : modify::generate_variants(premise, hypothesis, req, grammar)) {
            const auto a = natlog::annotate_detailed(v.premise, v.hypothesis, seed.relation, lexicon, options.annotate);
            if (a.fallback) ++out.audit.fallbacks;
            DatasetRecord r;
            r.id = fmt::format("s{:02}-{}-{}-{}{}", seed.id, req.slots().code(), id_surface(req.surface()),
                               v.premise_modified ? "p" : "", v.hypothesis_modified ? "h" : "");
            r.seed_id = seed.id;
            r.premise = v.premise.render();
            r.hypothesis = v.hypothesis.render();
            r.premise_modified = v.premise_modified;
            r.hypothesis_modified = v.hypothesis_modified;
            r.slots = req.slots();
            r.modifier_surface = req.surface();
            r.modifier_type = req.type();
            r.seed_label = seed.sick_label;
            r.gold_label = a.relation;
            out.records.push_back(std::move(r));
        }
    }
    out.audit.pairs_before_dedup = out.records.size();
    if (options.include_originals) {
        DatasetRecord r;
        r.id = fmt::format("s{:02}-orig", seed.id);
        r.seed_id = seed.id;
        r.premise = seed.premise;
        r.hypothesis = seed.hypothesis;
        r.seed_label = seed.sick_label;
        r.gold_label = seed.relation;
        out.records.push_back(std::move(r));
    }
    return out;
}

template <class E>
[[noreturn]] void rethrow_for_seed(int seed_id, const E& e) {
    throw E(fmt::format("seed {}: {}", seed_id, e.what()));
}

SeedOutput build_seed_checked(const SeedPair& seed, const Lexicon& lexicon, const parser::Grammar& grammar,
                              const BuildOptions& options) {
    try {
        return build_seed(seed, lexicon, grammar, options);
    } catch (const ParseOutOfCoverage& e) {
        rethrow_for_seed(seed.id, e);
    } catch (const EmptyInput& e) {
        rethrow_for_seed(seed.id, e);
    } catch (const InterpretationError& e) {
        rethrow_for_seed(seed.id, e);
    } catch (const SlotMissing& e) {
        rethrow_for_seed(seed.id, e);
    } catch (const Error& e) {
        rethrow_for_seed(seed.id, e);
    }
}

}  // namespace

Corpus build_dataset(const SeedTable& seeds, const Lexicon& lexicon, const parser::Grammar& grammar,
                     const BuildOptions& options) {
    std::vector<const SeedPair*> selected;
    if (options.seed_ids.empty()) {
        for (const auto& s : seeds.seeds()) selected.push_back(&s);
    } else {
        for (int id : options.seed_ids) selected.push_back(&seeds.at(id));
    }

    std::vector<std::future<SeedOutput>> jobs;
    for (const auto* seed : selected) {
        jobs.push_back(std::async(std::launch::async, build_seed_checked, std::cref(*seed), std::cref(lexicon),
                                  std::cref(grammar), std::cref(options)));
    }

    Corpus corpus;
    GenerationAudit audit;
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (auto& job : jobs) {
        auto part = job.get();
        audit.requests += part.audit.requests;
        audit.pairs_before_dedup += part.audit.pairs_before_dedup;
        audit.fallbacks += part.audit.fallbacks;
        for (auto& r : part.records) {
            if (!seen.emplace(r.premise, r.hypothesis, to_string(*r.gold_label)).second) {
                if (!r.is_original()) ++audit.duplicates_removed;
                continue;
            }
            corpus.records.push_back(std::move(r));
        }
    }
    corpus.manifest = compute_stats(corpus.records);
    corpus.manifest.generation = audit;
    return corpus;
}

Corpus ingest_dataset(const std::filesystem::path& path, const std::filesystem::path& mapping_path,
                      const SeedTable* seeds) {
    const std::string text = read_file(path);
    const std::string ext = ascii_lower(path.extension().string());
    Corpus corpus;
    if (ext == ".csv" || ext == ".tsv") {
        if (mapping_path.empty()) throw ConfigError(fmt::format("{}: delimited input needs a column mapping", path.string()));
        auto mapping = ColumnMapping::load(mapping_path);
        corpus.records = parse_mapped(text, mapping, seeds);
    } else {
        corpus.records = parse_records(text);
    }
    corpus.manifest = compute_stats(corpus.records);
    return corpus;
}

}  // namespace sicck::dataset
