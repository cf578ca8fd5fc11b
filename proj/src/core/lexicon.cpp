#include "sicck/core/lexicon.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/labels.hpp"
#include "sicck/core/text.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fmt/format.h>

namespace sicck {

std::string_view to_string(Slot s) noexcept {
    switch (s) {
        case Slot::Subject: return "subject";
        case Slot::Verb: return "verb";
        case Slot::Object: return "object";
    }
    return "?";
}

Slot parse_slot(std::string_view text) {
    const std::string key = ascii_lower(trim(text));
    if (key == "subject" || key == "s" || key == "subj") return Slot::Subject;
    if (key == "verb" || key == "v") return Slot::Verb;
    if (key == "object" || key == "o" || key == "obj") return Slot::Object;
    throw ConfigError("unknown SVO slot '" + std::string(text) + "'");
}

std::size_t SlotSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Slot> SlotSet::to_vector() const {
    std::vector<Slot> out;
    for (Slot s : kAllSlots) {
        if (contains(s)) out.push_back(s);
    }
    return out;
}

bool SlotSet::is_valid_combination() const noexcept {
    return *this == SlotSet{Slot::Subject} || *this == SlotSet{Slot::Verb} || *this == SlotSet{Slot::Object} ||
           *this == SlotSet{Slot::Subject, Slot::Object} || *this == SlotSet{Slot::Verb, Slot::Object};
}

std::string SlotSet::code() const {
    std::string out;
    if (contains(Slot::Subject)) out += 'S';
    if (contains(Slot::Verb)) out += 'V';
    if (contains(Slot::Object)) out += 'O';
    return out;
}

std::string_view to_string(ModifierType t) noexcept {
    switch (t) {
        case ModifierType::Universal: return "universal";
        case ModifierType::Existential: return "existential";
        case ModifierType::Negation: return "negation";
        case ModifierType::Adjective: return "adjective";
        case ModifierType::Adverb: return "adverb";
    }
    return "?";
}

ModifierType parse_modifier_type(std::string_view text) {
    const std::string key = ascii_lower(trim(text));
    if (key == "universal" || key == "universal quantifier" || key == "universal quantifiers") {
        return ModifierType::Universal;
    }
    if (key == "existential" || key == "existential quantifier" || key == "existential quantifiers") {
        return ModifierType::Existential;
    }
    if (key == "negation" || key == "negations") return ModifierType::Negation;
    if (key == "adjective" || key == "adjectives") return ModifierType::Adjective;
    if (key == "adverb" || key == "adverbs") return ModifierType::Adverb;
    throw ConfigError("unknown modifier type '" + std::string(text) + "'");
}

ModifierGroup group_of(ModifierType t) noexcept {
    switch (t) {
        case ModifierType::Universal: return ModifierGroup::Universal;
        case ModifierType::Existential: return ModifierGroup::Existential;
        case ModifierType::Negation: return ModifierGroup::Negation;
        case ModifierType::Adjective:
        case ModifierType::Adverb: return ModifierGroup::AdjectiveAdverb;
    }
    return ModifierGroup::AdjectiveAdverb;
}

std::string_view to_string(ModifierGroup g) noexcept {
    switch (g) {
        case ModifierGroup::Universal: return "universal";
        case ModifierGroup::Existential: return "existential";
        case ModifierGroup::Negation: return "negation";
        case ModifierGroup::AdjectiveAdverb: return "adjective_adverb";
    }
    return "?";
}

namespace {

constexpr std::string_view kHeader = "# surface\ttype\tslots\trewrite";

struct RewriteName {
    RewriteKind kind;
    std::string_view name;
};

constexpr std::array<RewriteName, 6> kRewriteNames = {{
    {RewriteKind::Determiner, "det"},
    {RewriteKind::Numeral, "num"},
    {RewriteKind::Prefix, "prefix"},
    {RewriteKind::Adjective, "adj"},
    {RewriteKind::ArticleAdjective, "art-adj"},
    {RewriteKind::Adverb, "adv"},
}};

Rewrite parse_rewrite(std::string_view text, std::size_t line) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError(fmt::format("modifier lexicon line {}: rewrite '{}' lacks 'kind:'", line, text));
    }
    const std::string_view kind = text.substr(0, colon);
    for (const auto& rn : kRewriteNames) {
        if (rn.name == kind) {
            return Rewrite{rn.kind, std::string(text.substr(colon + 1))};
        }
    }
    throw ConfigError(fmt::format("modifier lexicon line {}: unknown rewrite kind '{}'", line, kind));
}

std::string_view rewrite_name(RewriteKind k) {
    for (const auto& rn : kRewriteNames) {
        if (rn.kind == k) return rn.name;
    }
    return "?";
}

}  // namespace

Lexicon::Lexicon(std::vector<ModifierEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.slots.empty()) {
            throw ConfigError("modifier '" + e.surface + "' admits no slot");
        }
        const bool verb_only_kind = e.rewrite.kind == RewriteKind::Adverb;
        if (verb_only_kind && (e.slots.contains(Slot::Subject) || e.slots.contains(Slot::Object))) {
            throw ConfigError("adverb modifier '" + e.surface + "' cannot apply to noun phrases");
        }
    }
}

Lexicon Lexicon::parse(std::string_view text) {
    std::vector<ModifierEntry> entries;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 4) {
            throw ConfigError(fmt::format("modifier lexicon line {}: expected 4 tab-separated columns", line_no));
        }
        ModifierEntry e;
        e.surface = std::string(cols[0]);
        e.type = parse_modifier_type(cols[1]);
        for (std::string_view s : split(cols[2], ',')) {
            e.slots.insert(parse_slot(s));
        }
        e.rewrite = parse_rewrite(cols[3], line_no);
        entries.push_back(std::move(e));
    }
    return Lexicon(std::move(entries));
}

Lexicon Lexicon::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::string Lexicon::serialize() const {
    std::string out(kHeader);
    out += '\n';
    for (const auto& e : entries_) {
        std::string slots;
        for (Slot s : e.slots.to_vector()) {
            if (!slots.empty()) slots += ',';
            slots += to_string(s);
        }
        out += fmt::format("{}\t{}\t{}\t{}:{}\n", e.surface, to_string(e.type), slots, rewrite_name(e.rewrite.kind),
                           e.rewrite.text);
    }
    return out;
}

std::vector<ModifierEntry> Lexicon::modifiers_for_slot(Slot slot) const {
    std::vector<ModifierEntry> out;
    for (const auto& e : entries_) {
        if (e.slots.contains(slot)) out.push_back(e);
    }
    return out;
}

const ModifierEntry* Lexicon::find(std::string_view surface) const noexcept {
    for (const auto& e : entries_) {
        if (e.surface == surface) return &e;
    }
    return nullptr;
}

std::vector<std::string> Lexicon::words() const {
    std::vector<std::string> out;
    auto add = [&](std::string_view phrase) {
        for (std::string_view w : split_whitespace(phrase)) {
            std::string lw = ascii_lower(w);
            if (std::find(out.begin(), out.end(), lw) == out.end()) out.push_back(std::move(lw));
        }
    };
    for (const auto& e : entries_) {
        add(e.surface);
        add(e.rewrite.text);
    }
    return out;
}

bool Lexicon::is_modifier_content_word(std::string_view word) const {
    const std::string w = ascii_lower(word);
    for (const auto& e : entries_) {
        const bool content = e.rewrite.kind == RewriteKind::Adjective ||
                             e.rewrite.kind == RewriteKind::ArticleAdjective || e.rewrite.kind == RewriteKind::Adverb;
        if (content && ascii_lower(e.rewrite.text) == w) return true;
    }
    return false;
}

}  // namespace sicck
