#pragma once

#include "sicck/core/lexicon.hpp"
#include "sicck/core/record.hpp"
#include "sicck/core/seeds.hpp"
#include "sicck/dataset/manifest.hpp"
#include "sicck/natlog/annotate.hpp"
#include "sicck/parser/grammar.hpp"

#include <filesystem>
#include <vector>

namespace sicck::dataset {

struct BuildOptions {
    std::vector<int> seed_ids;       // empty: every seed in the table
    bool include_originals = true;   // one unmodified record per seed
    natlog::AnnotateOptions annotate;
};

struct Corpus {
    std::vector<DatasetRecord> records;
    CorpusManifest manifest;
};

/// Generates, labels and deduplicates the corpus. Records come out grouped by seed in table order,
/// modified pairs in enumeration order, then the seed's original. Ids look like
/// "s01-SO-every+some-ph" and "s01-orig". Failures are rethrown with the seed id prefixed.
Corpus build_dataset(const SeedTable& seeds, const Lexicon& lexicon, const parser::Grammar& grammar,
                     const BuildOptions& options = {});

/// Canonical JSONL, or a delimited file (.csv/.tsv) read through `mapping_path`.
Corpus ingest_dataset(const std::filesystem::path& path, const std::filesystem::path& mapping_path = {},
                      const SeedTable* seeds = nullptr);

}  // namespace sicck::dataset
