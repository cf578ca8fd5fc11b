#include "sicck/parser/grammar.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/labels.hpp"
#include "sicck/core/text.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>

namespace sicck::parser {

namespace {

struct TagName {
    PosTag tag;
    std::string_view name;
};

constexpr std::array<TagName, 10> kTagNames = {{
    {PosTag::Art, "ART"},
    {PosTag::Num, "NUM"},
    {PosTag::Qnt, "QNT"},
    {PosTag::Neg, "NEG"},
    {PosTag::Adv, "ADV"},
    {PosTag::Aux, "AUX"},
    {PosTag::Verb, "VERB"},
    {PosTag::Prep, "PREP"},
    {PosTag::Adj, "ADJ"},
    {PosTag::Noun, "NOUN"},
}};

std::vector<std::string> lower_words(std::string_view phrase) {
    std::vector<std::string> out;
    for (auto w : split_whitespace(phrase)) out.push_back(ascii_lower(w));
    return out;
}

}  // namespace

std::string_view to_string(PosTag t) noexcept {
    for (const auto& tn : kTagNames) {
        if (tn.tag == t) return tn.name;
    }
    return "?";
}

PosTag parse_pos_tag(std::string_view text) {
    for (const auto& tn : kTagNames) {
        if (tn.name == text) return tn.tag;
    }
    throw ConfigError("unknown POS tag '" + std::string(text) + "'");
}

PosLexicon PosLexicon::parse(std::string_view text) {
    PosLexicon lex;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 2) {
            throw ConfigError(fmt::format("POS lexicon line {}: expected word<TAB>tag", line_no));
        }
        auto [it, inserted] = lex.tags_.emplace(ascii_lower(cols[0]), parse_pos_tag(cols[1]));
        if (!inserted) {
            throw ConfigError(fmt::format("POS lexicon line {}: duplicate word '{}'", line_no, cols[0]));
        }
    }
    return lex;
}

PosLexicon PosLexicon::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::optional<PosTag> PosLexicon::tag(std::string_view lower_word) const {
    const auto it = tags_.find(lower_word);
    if (it == tags_.end()) return std::nullopt;
    return it->second;
}

Grammar::Grammar(PosLexicon pos, const Lexicon& modifiers) : pos_(std::move(pos)) {
    auto add = [&](std::vector<std::string> phrase) {
        if (!phrase.empty() && std::find(determiners_.begin(), determiners_.end(), phrase) == determiners_.end()) {
            determiners_.push_back(std::move(phrase));
        }
    };
    for (const auto& e : modifiers.entries()) {
        if (!e.slots.contains(Slot::Subject) && !e.slots.contains(Slot::Object)) continue;
        switch (e.rewrite.kind) {
            case RewriteKind::Determiner:
            case RewriteKind::Prefix: add(lower_words(e.rewrite.text)); break;
            case RewriteKind::Numeral:
                for (const char* numeral : {"one", "two"}) {
                    auto words = lower_words(e.rewrite.text);
                    words.emplace_back(numeral);
                    add(std::move(words));
                }
                break;
            default: break;
        }
    }
    for (const auto& phrase : determiners_) {
        for (const auto& w : phrase) {
            if (!pos_.tag(w)) {
                throw ConfigError("determiner word '" + w + "' is missing from the POS lexicon");
            }
        }
    }
    std::stable_sort(determiners_.begin(), determiners_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

Grammar Grammar::load(const std::filesystem::path& data_dir) {
    return Grammar(PosLexicon::load(data_dir / "pos_lexicon.tsv"), Lexicon::load(data_dir / "modifiers.tsv"));
}

}  // namespace sicck::parser
