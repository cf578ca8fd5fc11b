#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"
#include "sicck/natlog/join.hpp"
#include "test_data.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace sicck;
using namespace sicck::natlog;

namespace {

using Set = std::set<int>;

// Straight from the set-theoretic definitions, on explicit element sets.
Relation classify_sets(const Set& x, const Set& y, const Set& u) {
    Set both, either;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(both, both.end()));
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::inserter(either, either.end()));
    const bool x_in_y = std::includes(y.begin(), y.end(), x.begin(), x.end());
    const bool y_in_x = std::includes(x.begin(), x.end(), y.begin(), y.end());
    const bool disjoint = both.empty();
    const bool exhaustive = either == u;
    if (x == y) return Relation::Equivalence;
    if (x_in_y) return Relation::ForwardEntailment;
    if (y_in_x) return Relation::ReverseEntailment;
    if (disjoint && exhaustive) return Relation::Negation;
    if (disjoint) return Relation::Alternation;
    if (exhaustive) return Relation::Cover;
    return Relation::Independence;
}

std::vector<Set> subsets(int m) {
    std::vector<Set> out;
    for (int mask = 0; mask < (1 << m); ++mask) {
        Set s;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) s.insert(e);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(JoinTable, FrozenArtifactMatchesComputation) {
    const auto frozen = read_file(test::data_dir() / "join_table.txt");
    EXPECT_EQ(frozen, JoinTable::compute().serialize());
    EXPECT_EQ(JoinTable::parse(frozen), JoinTable::compute());
}

TEST(JoinTable, SoundOverSmallUniverses) {
    const auto table = JoinTable::parse(read_file(test::data_dir() / "join_table.txt"));
    for (int m = 1; m <= 4; ++m) {
        const auto all = subsets(m);
        const Set u = all.back();
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    const auto r1 = classify_sets(x, y, u);
                    const auto r2 = classify_sets(y, z, u);
                    ASSERT_TRUE(table.allows(r1, r2, classify_sets(x, z, u)))
                        << to_string(r1) << ";" << to_string(r2) << " at m=" << m;
                }
    }
}

// Three sets split the universe into 8 Venn regions; a triple is fixed up to isomorphism by which
// regions are occupied, so the 256 occupancy patterns give every cell of the complete table.
TEST(JoinTable, CompleteByVennRegions) {
    std::array<std::array<std::set<Relation>, 7>, 7> cells;
    for (int pattern = 0; pattern < 256; ++pattern) {
        Set x, y, z, u;
        for (int region = 0; region < 8; ++region) {
            if (!((pattern >> region) & 1)) continue;
            u.insert(region);
            if (region & 1) x.insert(region);
            if (region & 2) y.insert(region);
            if (region & 4) z.insert(region);
        }
        if (u.empty()) continue;
        cells[static_cast<int>(classify_sets(x, y, u))][static_cast<int>(classify_sets(y, z, u))].insert(
            classify_sets(x, z, u));
    }
    const auto table = JoinTable::compute();
    for (Relation a : kAllRelations)
        for (Relation b : kAllRelations) {
            const auto& expected = cells[static_cast<int>(a)][static_cast<int>(b)];
            EXPECT_EQ(table.lookup(a, b), std::vector<Relation>(expected.begin(), expected.end()))
                << to_string(a) << ";" << to_string(b);
        }
}

TEST(JoinTable, SmallUniversesAreIncomplete) {
    EXPECT_FALSE(JoinTable::compute(4).allows(Relation::Independence, Relation::Independence,
                                              Relation::ForwardEntailment));
    EXPECT_TRUE(JoinTable::compute().allows(Relation::Independence, Relation::Independence,
                                            Relation::ForwardEntailment));
}

TEST(JoinTable, TextbookCellsForNonDegenerateSets) {
    // alternation then negation lands inside: cat | dog, dog ^ non-dog  =>  cat < non-dog
    EXPECT_EQ(join_relations(Relation::Alternation, Relation::Negation),
              std::vector<Relation>{Relation::ForwardEntailment});
    EXPECT_EQ(join_relations(Relation::Negation, Relation::Alternation),
              std::vector<Relation>{Relation::ReverseEntailment});
    EXPECT_EQ(join_relations(Relation::Cover, Relation::Negation), std::vector<Relation>{Relation::ReverseEntailment});
}

TEST(JoinTable, ParseRejectsBadRows) {
    EXPECT_THROW(JoinTable::parse("FE\tFE\n"), ConfigError);
    EXPECT_THROW(JoinTable::parse("FE\tFE\tFE\nFE\tFE\tFE\n"), ConfigError);
    EXPECT_THROW(JoinTable::compute(0), ConfigError);
    EXPECT_THROW(JoinTable::compute(9), ConfigError);
}
