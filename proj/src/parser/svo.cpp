#include "sicck/parser/svo.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/labels.hpp"
#include "sicck/core/text.hpp"

#include <fmt/format.h>

namespace sicck::parser {

TokenList tokenize(std::string_view raw) {
    TokenList out;
    for (std::string_view w : split_whitespace(raw)) {
        out.text.emplace_back(w);
        out.norm.push_back(ascii_lower(w));
    }
    if (out.text.empty()) {
        throw EmptyInput("empty sentence");
    }
    return out;
}

std::string SvoSentence::render() const { return join(original, " "); }

std::string SvoSentence::text(TokenSpan span) const {
    std::vector<std::string> parts(original.begin() + static_cast<std::ptrdiff_t>(span.begin),
                                   original.begin() + static_cast<std::ptrdiff_t>(span.end));
    return join(parts, " ");
}

namespace {

class Chunker {
public:
    Chunker(const TokenList& tokens, const Grammar& grammar) : tokens_(tokens), grammar_(grammar) {
        tags_.reserve(tokens.size());
        for (const auto& w : tokens.norm) {
            const auto tag = grammar.pos().tag(w);
            if (!tag) {
                throw ParseOutOfCoverage(fmt::format("unknown word '{}'", w));
            }
            tags_.push_back(*tag);
        }
    }

    SvoSentence run() {
        SvoSentence out;
        out.tokens = tokens_.norm;
        out.original = tokens_.text;
        out.tags = tags_;

        auto subject = noun_phrase(pos_);
        if (!subject) {
            throw ParseOutOfCoverage("sentence does not start with a noun phrase");
        }
        out.subject = *subject;
        pos_ = subject->span.end;

        // prepositional modifiers of the subject ("a girl with a black bag")
        while (at(PosTag::Prep)) {
            ++pos_;
            auto pp = noun_phrase(pos_);
            if (!pp) throw ParseOutOfCoverage("dangling preposition before the verb");
            pos_ = pp->span.end;
        }

        if (!at(PosTag::Aux)) {
            throw ParseOutOfCoverage(pos_ >= size() ? "no verb found" : fmt::format("unexpected '{}' before the verb",
                                                                                    tokens_.norm[pos_]));
        }
        out.verb.begin = pos_++;
        while (at(PosTag::Adv) || at(PosTag::Neg)) ++pos_;
        if (at(PosTag::Verb)) {
            out.head_verb = pos_++;
        }
        out.verb.end = pos_;

        std::optional<std::size_t> pending_prep;
        bool predicative_allowed = true;
        while (pos_ < size()) {
            if (at(PosTag::Aux) || at(PosTag::Verb)) {
                throw ParseOutOfCoverage("more than one clause");
            }
            if (auto np = noun_phrase(pos_)) {
                out.object = *np;
                out.object_preposition = pending_prep;
                pending_prep.reset();
                pos_ = np->span.end;
                predicative_allowed = false;
                continue;
            }
            if (at(PosTag::Prep)) {
                pending_prep = pos_++;
                predicative_allowed = false;
                continue;
            }
            if (at(PosTag::Adj) && predicative_allowed) {
                ++pos_;
                continue;
            }
            throw ParseOutOfCoverage(fmt::format("unexpected '{}' after the verb", tokens_.norm[pos_]));
        }
        if (pending_prep) {
            throw ParseOutOfCoverage("sentence ends in a preposition");
        }
        return out;
    }

private:
    std::size_t size() const noexcept { return tokens_.size(); }
    bool at(PosTag t) const noexcept { return pos_ < size() && tags_[pos_] == t; }
    bool tag_is(std::size_t i, PosTag t) const noexcept { return i < size() && tags_[i] == t; }

    std::size_t match_determiner(std::size_t i) const {
        for (const auto& phrase : grammar_.determiner_phrases()) {
            if (i + phrase.size() > size()) continue;
            bool ok = true;
            for (std::size_t k = 0; k < phrase.size() && ok; ++k) ok = tokens_.norm[i + k] == phrase[k];
            if (ok) return phrase.size();
        }
        return 0;
    }

    std::optional<NounPhraseSpan> noun_phrase(std::size_t start) const {
        std::size_t i = start;
        i += match_determiner(i);
        if (tag_is(i, PosTag::Art) || tag_is(i, PosTag::Num)) ++i;
        const std::size_t det_end = i;
        while (tag_is(i, PosTag::Adj)) ++i;
        const std::size_t noun_begin = i;
        while (tag_is(i, PosTag::Noun)) ++i;
        if (i == noun_begin) return std::nullopt;
        return NounPhraseSpan{TokenSpan{start, i}, det_end, noun_begin};
    }

    const TokenList& tokens_;
    const Grammar& grammar_;
    std::vector<PosTag> tags_;
    std::size_t pos_ = 0;
};

}  // namespace

SvoSentence parse_svo(const TokenList& tokens, const Grammar& grammar) {
    if (tokens.size() == 0) throw EmptyInput("empty token list");
    return Chunker(tokens, grammar).run();
}

SvoSentence parse_sentence(std::string_view raw, const Grammar& grammar) {
    return parse_svo(tokenize(raw), grammar);
}

}  // namespace sicck::parser
