#include "sicck/core/labels.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <algorithm>
#include <cctype>

namespace sicck {

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

namespace {

std::string squash(std::string_view text) {
    // lowercase, drop spaces/underscores/hyphens so "Forward Entailment" == "forward_entailment"
    std::string out;
    for (unsigned char c : text) {
        if (c == ' ' || c == '_' || c == '-' || c == '\t') {
            continue;
        }
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

}  // namespace

std::string_view to_string(Relation r) noexcept {
    switch (r) {
        case Relation::Equivalence: return "Equivalence";
        case Relation::ForwardEntailment: return "FE";
        case Relation::ReverseEntailment: return "RE";
        case Relation::Negation: return "Negation";
        case Relation::Alternation: return "Alternation";
        case Relation::Cover: return "Cover";
        case Relation::Independence: return "Independence";
    }
    return "?";
}

Relation parse_relation(std::string_view text) {
    const std::string key = squash(trim(text));
    if (key == "equivalence" || key == "equiv" || key == "eq") return Relation::Equivalence;
    if (key == "fe" || key == "forwardentailment") return Relation::ForwardEntailment;
    if (key == "re" || key == "reverseentailment") return Relation::ReverseEntailment;
    if (key == "negation" || key == "neg") return Relation::Negation;
    if (key == "alternation" || key == "alt") return Relation::Alternation;
    if (key == "cover") return Relation::Cover;
    if (key == "independence" || key == "neutral") return Relation::Independence;
    throw LabelParseError("unknown entailment relation '" + std::string(text) + "'");
}

AmbiguousLabel AmbiguousLabel::make(Relation first, Relation second) {
    if (first == Relation::Negation && second == Relation::Alternation) return negation_or_alternation();
    if (first == Relation::Cover && second == Relation::ForwardEntailment) return cover_or_forward();
    throw LabelParseError("unsupported ambiguous label " + std::string(to_string(first)) + "|" +
                          std::string(to_string(second)));
}

std::string to_string(const AmbiguousLabel& label) {
    return std::string(to_string(label.first())) + "|" + std::string(to_string(label.second()));
}

std::string to_string(const GoldLabel& label) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Relation>) {
                return std::string(to_string(v));
            } else {
                return to_string(v);
            }
        },
        label);
}

GoldLabel parse_gold_label(std::string_view text) {
    const std::string_view t = trim(text);
    const auto bar = t.find('|');
    if (bar == std::string_view::npos) {
        return parse_relation(t);
    }
    return AmbiguousLabel::make(parse_relation(t.substr(0, bar)), parse_relation(t.substr(bar + 1)));
}

std::string_view to_string(CompressedLabel c) noexcept {
    switch (c) {
        case CompressedLabel::ForwardEntailment: return "FE";
        case CompressedLabel::ReverseEntailment: return "RE";
        case CompressedLabel::Contradiction: return "Contradiction";
        case CompressedLabel::Neutral: return "Neutral";
    }
    return "?";
}

CompressedLabel parse_compressed_label(std::string_view text) {
    const std::string key = squash(trim(text));
    if (key == "fe" || key == "forwardentailment") return CompressedLabel::ForwardEntailment;
    if (key == "re" || key == "reverseentailment") return CompressedLabel::ReverseEntailment;
    if (key == "contradiction") return CompressedLabel::Contradiction;
    if (key == "neutral") return CompressedLabel::Neutral;
    throw LabelParseError("unknown compressed label '" + std::string(text) + "'");
}

std::string_view to_string(NliLabel l) noexcept {
    switch (l) {
        case NliLabel::Entailment: return "Entailment";
        case NliLabel::Contradiction: return "Contradiction";
        case NliLabel::Neutral: return "Neutral";
    }
    return "?";
}

NliLabel parse_nli_label(std::string_view text) {
    const std::string key = squash(trim(text));
    if (key == "entailment" || key == "fe" || key == "forwardentailment") return NliLabel::Entailment;
    if (key == "contradiction") return NliLabel::Contradiction;
    if (key == "neutral") return NliLabel::Neutral;
    throw LabelParseError("unknown NLI label '" + std::string(text) + "'");
}

}  // namespace sicck
