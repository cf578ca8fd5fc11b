#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicck {

enum class Slot : std::uint8_t { Subject, Verb, Object };

inline constexpr std::array<Slot, 3> kAllSlots = {Slot::Subject, Slot::Verb, Slot::Object};

std::string_view to_string(Slot s) noexcept;
Slot parse_slot(std::string_view text);

/// Small value set of SVO slots.
class SlotSet {
public:
    constexpr SlotSet() = default;
    constexpr SlotSet(std::initializer_list<Slot> slots) {
        for (Slot s : slots) insert(s);
    }

    constexpr void insert(Slot s) noexcept { bits_ |= bit(s); }
    constexpr bool contains(Slot s) const noexcept { return (bits_ & bit(s)) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::uint8_t bits() const noexcept { return bits_; }
    std::size_t size() const noexcept;
    std::vector<Slot> to_vector() const;

    /// True for {S}, {V}, {O}, {S,O}, {V,O}.
    bool is_valid_combination() const noexcept;

    /// "S", "V", "O", "SO", "VO" (empty -> "").
    std::string code() const;

    friend constexpr bool operator==(SlotSet, SlotSet) = default;

private:
    static constexpr std::uint8_t bit(Slot s) noexcept { return static_cast<std::uint8_t>(1u << static_cast<int>(s)); }
    std::uint8_t bits_ = 0;
};

enum class ModifierType : std::uint8_t { Universal, Existential, Negation, Adjective, Adverb };

std::string_view to_string(ModifierType t) noexcept;
ModifierType parse_modifier_type(std::string_view text);

/// Reporting groups; adjectives and adverbs are counted together.
enum class ModifierGroup : std::uint8_t { Universal, Existential, Negation, AdjectiveAdverb };

inline constexpr std::array<ModifierGroup, 4> kAllModifierGroups = {
    ModifierGroup::Universal, ModifierGroup::Existential, ModifierGroup::Negation, ModifierGroup::AdjectiveAdverb};

ModifierGroup group_of(ModifierType t) noexcept;
std::string_view to_string(ModifierGroup g) noexcept;

/// How an entry is written into a noun phrase.
enum class RewriteKind : std::uint8_t {
    Determiner,         // replaces the article: "an old man" -> "every old man"
    Numeral,            // replaces the article and adds a numeral: "at least one old man"
    Prefix,             // goes in front of the whole NP: "not an old man"
    Adjective,          // after the determiner: "a happy old man"
    ArticleAdjective,   // "an abnormal" replaces a/an, otherwise the bare adjective is inserted
    Adverb,             // verb-only entries
};

struct Rewrite {
    RewriteKind kind = RewriteKind::Determiner;
    std::string text;  // tokens written into the sentence (before any numeral)

    friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

struct ModifierEntry {
    std::string surface;
    ModifierType type = ModifierType::Universal;
    SlotSet slots;
    Rewrite rewrite;

    friend bool operator==(const ModifierEntry&, const ModifierEntry&) = default;
};

/// The modifier lexicon, in file order.
class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::vector<ModifierEntry> entries);

    static Lexicon parse(std::string_view text);
    static Lexicon load(const std::filesystem::path& path);
    std::string serialize() const;

    const std::vector<ModifierEntry>& entries() const noexcept { return entries_; }

    /// Entries admissible at `slot`, in lexicon order.
    std::vector<ModifierEntry> modifiers_for_slot(Slot slot) const;

    const ModifierEntry* find(std::string_view surface) const noexcept;

    /// Lowercased words of every entry surface and rewrite text ("every", "one", "of", ...).
    std::vector<std::string> words() const;

    /// True if `word` is one of the lexicon's adjective/adverb content words ("happy", "abnormal").
    bool is_modifier_content_word(std::string_view word) const;

private:
    std::vector<ModifierEntry> entries_;
};

}  // namespace sicck
