#include "sicck/natlog/join.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"
#include "sicck/kernels/kernels.hpp"
#include "sicck/natlog/models.hpp"

#include <fmt/format.h>

namespace sicck::natlog {

namespace {

std::size_t index_of(Relation r) { return static_cast<std::size_t>(r); }

Relation classify_bits(std::uint64_t x, std::uint64_t y, std::uint64_t u) {
    return classify_profile(kernels::set_profile({&x, 1}, {&y, 1}, {&u, 1}));
}

}  // namespace

JoinTable JoinTable::compute(int max_universe) {
    if (max_universe < 1 || max_universe > 8) throw ConfigError("join universe size must be in [1, 8]");
    JoinTable t;
    for (int m = 1; m <= max_universe; ++m) {
        const std::uint64_t sets = std::uint64_t{1} << m;
        const std::uint64_t u = sets - 1;
        // relation of every ordered pair once, then combine
        std::vector<Relation> rel(sets * sets);
        for (std::uint64_t x = 0; x < sets; ++x)
            for (std::uint64_t y = 0; y < sets; ++y) rel[x * sets + y] = classify_bits(x, y, u);
        for (std::uint64_t x = 0; x < sets; ++x)
            for (std::uint64_t y = 0; y < sets; ++y)
                for (std::uint64_t z = 0; z < sets; ++z) {
                    const Relation r1 = rel[x * sets + y];
                    const Relation r2 = rel[y * sets + z];
                    t.cells_[index_of(r1)][index_of(r2)] |=
                        static_cast<std::uint8_t>(1u << index_of(rel[x * sets + z]));
                }
    }
    return t;
}

std::vector<Relation> JoinTable::lookup(Relation r1, Relation r2) const {
    std::vector<Relation> out;
    for (Relation r : kAllRelations) {
        if (allows(r1, r2, r)) out.push_back(r);
    }
    return out;
}

bool JoinTable::allows(Relation r1, Relation r2, Relation r) const noexcept {
    return (cells_[index_of(r1)][index_of(r2)] >> index_of(r)) & 1u;
}

std::string JoinTable::serialize() const {
    std::string out = "# r1\tr2\tpossible r1;r2\n";
    for (Relation a : kAllRelations) {
        for (Relation b : kAllRelations) {
            std::vector<std::string> names;
            for (Relation r : lookup(a, b)) names.emplace_back(to_string(r));
            out += fmt::format("{}\t{}\t{}\n", to_string(a), to_string(b), join(names, ","));
        }
    }
    return out;
}

JoinTable JoinTable::parse(std::string_view text) {
    JoinTable t;
    bool seen[7][7] = {};
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 3) throw ConfigError(fmt::format("join table line {}: expected three columns", line_no));
        try {
            const auto a = index_of(parse_relation(cols[0]));
            const auto b = index_of(parse_relation(cols[1]));
            if (seen[a][b]) throw ConfigError(fmt::format("join table line {}: duplicate row", line_no));
            seen[a][b] = true;
            for (auto name : split(cols[2], ',')) {
                if (trim(name).empty()) continue;
                t.cells_[a][b] |= static_cast<std::uint8_t>(1u << index_of(parse_relation(trim(name))));
            }
        } catch (const LabelParseError& e) {
            throw ConfigError(fmt::format("join table line {}: {}", line_no, e.what()));
        }
    }
    for (const auto& row : seen)
        for (bool s : row)
            if (!s) throw ConfigError("join table is missing rows");
    return t;
}

std::vector<Relation> join_relations(Relation r1, Relation r2) {
    static const JoinTable table = JoinTable::compute(8);
    return table.lookup(r1, r2);
}

}  // namespace sicck::natlog
