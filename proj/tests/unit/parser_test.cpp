#include "sicck/core/errors.hpp"
#include "sicck/core/seeds.hpp"
#include "sicck/parser/svo.hpp"
#include "test_data.hpp"

#include <gtest/gtest.h>

using namespace sicck;
using namespace sicck::parser;

namespace {

const Grammar& grammar() {
    static const Grammar g = Grammar::load(test::data_dir());
    return g;
}

}  // namespace

TEST(Tokenize, CollapsesWhitespaceAndLowercases) {
    const auto t = tokenize("  A  boy\tis hitting ");
    ASSERT_EQ(t.size(), 3u + 1u);
    EXPECT_EQ(t.text[0], "A");
    EXPECT_EQ(t.norm[0], "a");
    EXPECT_EQ(t.norm[3], "hitting");
}

TEST(Tokenize, EmptyInputThrows) {
    EXPECT_THROW(tokenize(""), EmptyInput);
    EXPECT_THROW(tokenize(" \t "), EmptyInput);
}

TEST(ParseSvo, TransitiveSentence) {
    const auto s = parse_sentence("an old man is sitting in a field", grammar());
    EXPECT_EQ(s.text(s.subject.span), "an old man");
    EXPECT_EQ(s.subject.determiner_end, 1u);
    EXPECT_EQ(s.subject.noun_begin, 2u);
    EXPECT_EQ(s.text(s.verb), "is sitting");
    ASSERT_TRUE(s.head_verb);
    EXPECT_EQ(*s.head_verb, 4u);
    ASSERT_TRUE(s.object);
    EXPECT_EQ(s.text(s.object->span), "a field");
    ASSERT_TRUE(s.object_preposition);
    EXPECT_EQ(s.tokens[*s.object_preposition], "in");
}

TEST(ParseSvo, SubjectWithPrepositionalModifier) {
    const auto s = parse_sentence("A girl with a black bag is on a crowded train", grammar());
    EXPECT_EQ(s.text(s.subject.span), "A girl");
    EXPECT_EQ(s.text(s.verb), "is");
    EXPECT_FALSE(s.head_verb);
    EXPECT_EQ(s.text(s.object->span), "a crowded train");
}

TEST(ParseSvo, PredicativeAdjectiveWithoutObject) {
    const auto s = parse_sentence("A classroom is empty", grammar());
    EXPECT_FALSE(s.object);
    EXPECT_FALSE(s.has_slot(Slot::Object));
    EXPECT_TRUE(s.has_slot(Slot::Verb));
}

TEST(ParseSvo, ContractedNegationStaysInVerbGroup) {
    const auto s = parse_sentence("A deer isn't jumping over the fence", grammar());
    EXPECT_EQ(s.text(s.verb), "isn't jumping");
    EXPECT_EQ(s.text(s.object->span), "the fence");
}

TEST(ParseSvo, MultiwordDeterminers) {
    const auto s = parse_sentence("every one of the old man is not always sitting in at least one field", grammar());
    EXPECT_EQ(s.subject.determiner_end, 4u);
    EXPECT_EQ(s.text(s.verb), "is not always sitting");
    EXPECT_EQ(s.text(s.object->span), "at least one field");
    EXPECT_EQ(s.object->determiner_end - s.object->span.begin, 3u);
}

TEST(ParseSvo, PrefixNegationInsideNounPhrase) {
    const auto s = parse_sentence("not a boy is hitting a baseball", grammar());
    EXPECT_EQ(s.subject.determiner_end, 2u);
}

TEST(ParseSvo, OutOfCoverage) {
    EXPECT_THROW(parse_sentence("a zebra is sitting", grammar()), ParseOutOfCoverage);
    EXPECT_THROW(parse_sentence("a man a boy", grammar()), ParseOutOfCoverage);
    EXPECT_THROW(parse_sentence("a man is sitting a boy is running", grammar()), ParseOutOfCoverage);
    EXPECT_THROW(parse_sentence("a man is sitting in", grammar()), ParseOutOfCoverage);
    EXPECT_THROW(parse_sentence("sitting in a field", grammar()), ParseOutOfCoverage);
}

TEST(ParseSvo, AllSeedSentencesRoundTrip) {
    const auto seeds = SeedTable::load(test::data_dir() / "seeds.tsv");
    for (const auto& seed : seeds.seeds()) {
        for (const auto& text : {seed.premise, seed.hypothesis}) {
            SCOPED_TRACE(text);
            const auto s = parse_sentence(text, grammar());
            EXPECT_EQ(s.render(), text);
            EXPECT_EQ(parse_svo(tokenize(s.render()), grammar()), s);
        }
    }
}
