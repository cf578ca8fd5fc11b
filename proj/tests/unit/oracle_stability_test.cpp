#include "sicck/core/seeds.hpp"
#include "sicck/modify/engine.hpp"
#include "sicck/natlog/annotate.hpp"
#include "test_data.hpp"

#include <gtest/gtest.h>

using namespace sicck;

// Every generated pair gets the same label whether worlds hold up to 4 or up to 5 entities.
TEST(OracleStability, GeneratedCorpusSameAtFourAndFiveEntities) {
    const auto grammar = parser::Grammar::load(test::data_dir());
    const auto lexicon = Lexicon::load(test::data_dir() / "modifiers.tsv");
    const auto seeds = SeedTable::load(test::data_dir() / "seeds.tsv");
    natlog::AnnotateOptions four, five;
    four.max_entities = 4;
    five.max_entities = 5;

    std::size_t pairs = 0;
    for (const auto& seed : seeds.seeds()) {
        const auto p = parser::parse_sentence(seed.premise, grammar);
        const auto h = parser::parse_sentence(seed.hypothesis, grammar);
        for (const auto& req : modify::enumerate_combinations(p, h, lexicon)) {
            for (const auto& v : modify::generate_variants(p, h, req, grammar)) {
                const auto a4 = natlog::annotate_detailed(v.premise, v.hypothesis, seed.relation, lexicon, four);
                const auto a5 = natlog::annotate_detailed(v.premise, v.hypothesis, seed.relation, lexicon, five);
                EXPECT_EQ(a4.relation, a5.relation) << v.premise.render() << " / " << v.hypothesis.render();
                EXPECT_FALSE(a5.fallback && a5.note.find("worlds") != std::string::npos) << a5.note;
                ++pairs;
            }
        }
    }
    EXPECT_GT(pairs, 5000u);
}

// Three entities are not enough once both slots carry counting quantifiers: the counterexample
// below needs two boys and two bodies of water.
TEST(OracleStability, ThreeEntitiesMissACounterexample) {
    const auto grammar = parser::Grammar::load(test::data_dir());
    const auto lexicon = Lexicon::load(test::data_dir() / "modifiers.tsv");
    const auto p = parser::parse_sentence("Exactly one boy is standing in the cold water", grammar);
    const auto h = parser::parse_sentence("Exactly one boy is standing in the water", grammar);
    natlog::AnnotateOptions o;
    o.max_entities = 3;
    EXPECT_EQ(natlog::annotate_detailed(p, h, Relation::ForwardEntailment, lexicon, o).relation,
              Relation::ForwardEntailment);
    o.max_entities = 4;
    EXPECT_EQ(natlog::annotate_detailed(p, h, Relation::ForwardEntailment, lexicon, o).relation,
              Relation::Independence);
}
