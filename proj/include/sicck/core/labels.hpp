#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sicck {

/// The seven natural-logic relations between a premise set X and a hypothesis set Y.
enum class Relation : std::uint8_t {
    Equivalence,        // X = Y
    ForwardEntailment,  // X strictly inside Y
    ReverseEntailment,  // X strictly contains Y
    Negation,           // disjoint and exhaustive
    Alternation,        // disjoint, not exhaustive
    Cover,              // overlapping and exhaustive
    Independence,       // everything else ("Neutral")
};

inline constexpr std::array<Relation, 7> kAllRelations = {
    Relation::Equivalence, Relation::ForwardEntailment, Relation::ReverseEntailment, Relation::Negation,
    Relation::Alternation, Relation::Cover,             Relation::Independence,
};

/// Canonical text: Equivalence, FE, RE, Negation, Alternation, Cover, Independence.
std::string_view to_string(Relation r) noexcept;

/// Accepts the canonical names plus long forms ("Forward Entailment") and "Neutral" for Independence.
/// Case-insensitive. Throws LabelParseError.
Relation parse_relation(std::string_view text);

/// Two-way annotator disagreement. Only Negation|Alternation and Cover|FE exist.
class AmbiguousLabel {
public:
    static AmbiguousLabel negation_or_alternation() noexcept { return {Relation::Negation, Relation::Alternation}; }
    static AmbiguousLabel cover_or_forward() noexcept { return {Relation::Cover, Relation::ForwardEntailment}; }

    /// Throws LabelParseError for any other pair.
    static AmbiguousLabel make(Relation first, Relation second);

    Relation first() const noexcept { return first_; }
    Relation second() const noexcept { return second_; }

    friend bool operator==(const AmbiguousLabel&, const AmbiguousLabel&) = default;

private:
    AmbiguousLabel(Relation a, Relation b) noexcept : first_(a), second_(b) {}

    Relation first_;
    Relation second_;
};

std::string to_string(const AmbiguousLabel& label);

using GoldLabel = std::variant<Relation, AmbiguousLabel>;

std::string to_string(const GoldLabel& label);

/// Parses a single relation or an ambiguous "A|B" label. Throws LabelParseError.
GoldLabel parse_gold_label(std::string_view text);

/// The four-way label space the scorer works in.
enum class CompressedLabel : std::uint8_t { ForwardEntailment, ReverseEntailment, Contradiction, Neutral };

inline constexpr std::array<CompressedLabel, 4> kAllCompressedLabels = {
    CompressedLabel::ForwardEntailment, CompressedLabel::ReverseEntailment, CompressedLabel::Contradiction,
    CompressedLabel::Neutral};

std::string_view to_string(CompressedLabel c) noexcept;
CompressedLabel parse_compressed_label(std::string_view text);

/// Three-way labels of SICK seeds and of external NLI systems. Declaration order is the tie-break order.
enum class NliLabel : std::uint8_t { Entailment, Contradiction, Neutral };

inline constexpr std::array<NliLabel, 3> kAllNliLabels = {NliLabel::Entailment, NliLabel::Contradiction,
                                                         NliLabel::Neutral};

std::string_view to_string(NliLabel l) noexcept;
NliLabel parse_nli_label(std::string_view text);

/// Lowercases ASCII.
std::string ascii_lower(std::string_view text);

}  // namespace sicck
