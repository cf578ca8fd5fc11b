#include "sicck/core/errors.hpp"
#include "sicck/core/seeds.hpp"
#include "sicck/natlog/annotate.hpp"
#include "sicck/natlog/join.hpp"
#include "test_data.hpp"

#include <gtest/gtest.h>

using namespace sicck;
using namespace sicck::natlog;

namespace {

struct Env {
    parser::Grammar grammar = parser::Grammar::load(test::data_dir());
    Lexicon lexicon = Lexicon::load(test::data_dir() / "modifiers.tsv");
    SeedTable seeds = SeedTable::load(test::data_dir() / "seeds.tsv");
};

const Env& env() {
    static const Env e;
    return e;
}

parser::SvoSentence parse(std::string_view s) { return parser::parse_sentence(s, env().grammar); }

Relation annotate(std::string_view p, std::string_view h, Relation seed, int max_entities = 4) {
    AnnotateOptions o;
    o.max_entities = max_entities;
    return annotate_detailed(parse(p), parse(h), seed, env().lexicon, o).relation;
}

Relation relation_of(std::string_view p, std::string_view h, int max_entities = 3) {
    ModelOptions o;
    o.max_entities = max_entities;
    const auto m = enumerate_models(interpret(parse(p)), interpret(parse(h)), o);
    return classify_relation(m.premise, m.hypothesis);
}

}  // namespace

TEST(Interpret, DeterminersAndVerbGroup) {
    const auto p = interpret(parse("every old man is not always sitting in at least one field"));
    EXPECT_EQ(p.subject.quantifier, Quantifier::Every);
    EXPECT_EQ(p.subject.noun, "n:man");
    EXPECT_EQ(p.subject.adjectives, std::vector<std::string>{"a:old"});
    EXPECT_TRUE(p.body_negated);
    EXPECT_EQ(p.temporal, Temporal::Always);
    EXPECT_EQ(p.verb, "v:sitting in/2");
    ASSERT_TRUE(p.object);
    EXPECT_EQ(p.object->quantifier, Quantifier::AtLeastOne);

    const auto q = interpret(parse("Not a girl with a black bag is elegantly on the bag of no girl"));
    EXPECT_TRUE(q.subject.negated);
    EXPECT_EQ(q.subject.quantifier, Quantifier::Definite);
    EXPECT_EQ(q.adverbs, std::vector<std::string>{"d:elegantly"});
    EXPECT_EQ(q.verb, "v:be on bag of/2");
    EXPECT_EQ(q.object->quantifier, Quantifier::No);

    const auto r = interpret(parse("A classroom is empty"));
    EXPECT_EQ(r.verb, "v:be empty/1");
    EXPECT_FALSE(r.object);
}

TEST(Interpret, QuantifierMapping) {
    const std::pair<const char*, Quantifier> cases[] = {
        {"every", Quantifier::Every},        {"always", Quantifier::Every},
        {"every one of the", Quantifier::Every}, {"some", Quantifier::AtLeastOne},
        {"at least one", Quantifier::AtLeastOne}, {"exactly one", Quantifier::ExactlyOne},
        {"all but one", Quantifier::AllButOne}, {"no", Quantifier::No},
        {"never", Quantifier::No},            {"not every", Quantifier::NotEvery},
        {"the", Quantifier::Definite},        {"two", Quantifier::Definite},
    };
    for (const auto& [det, q] : cases) {
        const auto p = interpret(parse(std::string(det) + " man is sitting"));
        EXPECT_EQ(p.subject.quantifier, q) << det;
        EXPECT_FALSE(p.subject.negated) << det;
    }
}

TEST(Quantifiers, CountSemantics) {
    EXPECT_TRUE(quantifier_holds(Quantifier::Every, 0, 0));
    EXPECT_TRUE(quantifier_holds(Quantifier::NotEvery, 3, 2));
    EXPECT_FALSE(quantifier_holds(Quantifier::NotEvery, 0, 0));
    EXPECT_TRUE(quantifier_holds(Quantifier::AllButOne, 1, 0));
    EXPECT_TRUE(quantifier_holds(Quantifier::AllButOne, 4, 3));
    EXPECT_FALSE(quantifier_holds(Quantifier::AllButOne, 0, 0));
    EXPECT_TRUE(quantifier_holds(Quantifier::ExactlyOne, 5, 1));
}

TEST(ClassifyRelation, TableConditions) {
    using kernels::SetProfile;
    EXPECT_EQ(classify_profile({false, false, true, true}), Relation::Equivalence);
    EXPECT_EQ(classify_profile({false, true, true, true}), Relation::ForwardEntailment);
    EXPECT_EQ(classify_profile({true, false, true, false}), Relation::ReverseEntailment);
    EXPECT_EQ(classify_profile({true, true, false, false}), Relation::Negation);
    EXPECT_EQ(classify_profile({true, true, false, true}), Relation::Alternation);
    EXPECT_EQ(classify_profile({true, true, true, false}), Relation::Cover);
    EXPECT_EQ(classify_profile({true, true, true, true}), Relation::Independence);
}

TEST(ClassifyRelation, UniverseMismatch) {
    ModelOptions o;
    o.max_entities = 2;
    const auto a = enumerate_models(interpret(parse("a man is sitting")), interpret(parse("a man is sitting")), o);
    const auto b = enumerate_models(interpret(parse("a man is sitting")), interpret(parse("a man is sitting")), o);
    EXPECT_THROW(classify_relation(a.premise, b.hypothesis), UniverseMismatch);
    EXPECT_EQ(classify_relation(a.premise, a.hypothesis), Relation::Equivalence);
}

TEST(EnumerateModels, QuantifierExamples) {
    EXPECT_EQ(relation_of("no man is running", "some man is running"), Relation::Negation);
    EXPECT_EQ(relation_of("every man is running", "every man is running"), Relation::Equivalence);
    EXPECT_EQ(relation_of("every man is running", "some man is running"), Relation::ForwardEntailment);
    EXPECT_EQ(relation_of("not every man is running", "every man is running"), Relation::Negation);
    EXPECT_EQ(relation_of("exactly one man is running", "some man is running"), Relation::ForwardEntailment);
}

TEST(EnumerateModels, BudgetErrors) {
    const auto p = interpret(parse("a man is sitting"));
    ModelOptions o;
    o.max_entities = 0;
    EXPECT_THROW(enumerate_models(p, p, o), OracleBudgetError);
    o.max_entities = 6;
    EXPECT_THROW(enumerate_models(p, p, o), OracleBudgetError);
    o.max_entities = 4;
    o.max_worlds = 1;
    EXPECT_THROW(enumerate_models(p, p, o), OracleBudgetError);
}

TEST(AnnotatePair, ReproducesExampleTable) {
    const Relation fe = Relation::ForwardEntailment;
    EXPECT_EQ(annotate("an old man is sitting in a field", "a man is sitting in a field", fe), fe);
    EXPECT_EQ(annotate("every old man is sitting in a field", "a man is sitting in a field", fe), fe);
    EXPECT_EQ(annotate("an old man is sitting in a field", "every man is sitting in a field", fe),
              Relation::ReverseEntailment);
    EXPECT_EQ(annotate("an old man is elegantly sitting in a field", "a man is elegantly sitting in a field", fe), fe);
    EXPECT_EQ(annotate("an old man is sitting in every field", "a man is sitting in a field", fe), fe);
    EXPECT_EQ(annotate("an old man is sitting in a field", "a man is sitting in every field", fe),
              Relation::Independence);
}

TEST(AnnotatePair, RoleSwapIsNegation) {
    EXPECT_EQ(annotate("every turtle is following the fish", "every fish is following the turtle", Relation::Negation),
              Relation::Negation);
}

TEST(AnnotatePair, AllButOneFallsBackToNeutral) {
    const auto a = annotate_detailed(parse("all but one old man is sitting in a field"),
                                     parse("a man is sitting in a field"), Relation::ForwardEntailment, env().lexicon);
    EXPECT_TRUE(a.fallback);
    EXPECT_EQ(a.relation, Relation::Independence);
}

TEST(AnnotatePair, SeedRelationsAreRederived) {
    for (const auto& seed : env().seeds.seeds()) {
        EXPECT_EQ(derive_seed_relation(seed, env().grammar, env().lexicon), seed.relation) << "seed " << seed.id;
        EXPECT_EQ(annotate(seed.premise, seed.hypothesis, seed.relation), seed.relation) << "seed " << seed.id;
    }
}

TEST(AnnotatePair, TemporalAdverbs) {
    const Relation fe = Relation::ForwardEntailment;
    EXPECT_EQ(annotate("a man is always sitting in a field", "a man is sitting in a field", Relation::Independence), fe);
    // different men may be involved under the existential reading
    EXPECT_EQ(annotate("a man is never sitting in a field", "a man is sitting in a field", Relation::Independence),
              Relation::Independence);
    EXPECT_EQ(annotate("A deer is never jumping over a fence", "A deer is jumping over a fence", Relation::Negation),
              Relation::Alternation);
    EXPECT_EQ(annotate("A deer is always jumping over a fence", "A deer isn't jumping over the fence",
                       Relation::Negation),
              Relation::Alternation);
}

TEST(JoinTable, Examples) {
    EXPECT_EQ(join_relations(Relation::ForwardEntailment, Relation::ForwardEntailment),
              std::vector<Relation>{Relation::ForwardEntailment});
    EXPECT_EQ(join_relations(Relation::Negation, Relation::Negation), std::vector<Relation>{Relation::Equivalence});
    for (Relation r : kAllRelations) {
        EXPECT_EQ(join_relations(Relation::Equivalence, r), std::vector<Relation>{r});
        EXPECT_EQ(join_relations(r, Relation::Equivalence), std::vector<Relation>{r});
    }
}
