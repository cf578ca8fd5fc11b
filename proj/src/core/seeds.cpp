#include "sicck/core/seeds.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <charconv>
#include <fmt/format.h>

namespace sicck {

namespace {

constexpr std::string_view kHeader = "# id\tsick_label\trelation\tpremise\thypothesis";

bool compatible(NliLabel sick, Relation r) {
    switch (sick) {
        case NliLabel::Entailment: return r == Relation::ForwardEntailment;
        case NliLabel::Neutral: return r == Relation::Independence;
        case NliLabel::Contradiction: return r == Relation::Negation || r == Relation::Alternation;
    }
    return false;
}

}  // namespace

SeedTable::SeedTable(std::vector<SeedPair> seeds) : seeds_(std::move(seeds)) {
    for (std::size_t i = 0; i < seeds_.size(); ++i) {
        const auto& s = seeds_[i];
        if (s.id < 1 || s.id > 15) throw ConfigError(fmt::format("seed id {} outside [1,15]", s.id));
        for (std::size_t j = 0; j < i; ++j) {
            if (seeds_[j].id == s.id) throw ConfigError(fmt::format("duplicate seed id {}", s.id));
        }
        if (!compatible(s.sick_label, s.relation)) {
            throw ConfigError(fmt::format("seed {}: relation {} is not admissible for SICK label {}", s.id,
                                          to_string(s.relation), to_string(s.sick_label)));
        }
    }
}

SeedTable SeedTable::parse(std::string_view text) {
    std::vector<SeedPair> seeds;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 5) {
            throw ConfigError(fmt::format("seed table line {}: expected 5 tab-separated columns", line_no));
        }
        SeedPair s;
        const auto [ptr, ec] = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), s.id);
        if (ec != std::errc{} || ptr != cols[0].data() + cols[0].size()) {
            throw ConfigError(fmt::format("seed table line {}: bad id '{}'", line_no, cols[0]));
        }
        try {
            s.sick_label = parse_nli_label(cols[1]);
            s.relation = parse_relation(cols[2]);
        } catch (const LabelParseError& e) {
            throw ConfigError(fmt::format("seed table line {}: {}", line_no, e.what()));
        }
        s.premise = std::string(cols[3]);
        s.hypothesis = std::string(cols[4]);
        seeds.push_back(std::move(s));
    }
    return SeedTable(std::move(seeds));
}

SeedTable SeedTable::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::string SeedTable::serialize() const {
    std::string out(kHeader);
    out += '\n';
    for (const auto& s : seeds_) {
        out += fmt::format("{}\t{}\t{}\t{}\t{}\n", s.id, to_string(s.sick_label), to_string(s.relation), s.premise,
                           s.hypothesis);
    }
    return out;
}

const SeedPair& SeedTable::at(int id) const {
    for (const auto& s : seeds_) {
        if (s.id == id) return s;
    }
    throw ConfigError(fmt::format("unknown seed id {}", id));
}

Relation seed_label_to_relation(NliLabel seed_label, int seed_id, const SeedTable& table) {
    const SeedPair& seed = table.at(seed_id);
    if (seed.sick_label != seed_label) {
        throw ConfigError(fmt::format("seed {} is labelled {} in the seed table, not {}", seed_id,
                                      to_string(seed.sick_label), to_string(seed_label)));
    }
    return seed.relation;
}

}  // namespace sicck
