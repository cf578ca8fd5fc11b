#pragma once

#include "sicck/core/lexicon.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::parser {

enum class PosTag : std::uint8_t { Art, Num, Qnt, Neg, Adv, Aux, Verb, Prep, Adj, Noun };

std::string_view to_string(PosTag t) noexcept;
PosTag parse_pos_tag(std::string_view text);

/// Closed word list, one `word<TAB>tag` per line.
class PosLexicon {
public:
    static PosLexicon parse(std::string_view text);
    static PosLexicon load(const std::filesystem::path& path);

    std::optional<PosTag> tag(std::string_view lower_word) const;
    std::size_t size() const noexcept { return tags_.size(); }

private:
    std::map<std::string, PosTag, std::less<>> tags_;
};

/// Everything the shallow parser needs: word classes plus the multiword determiner phrases
/// that modifier insertion can produce ("every one of the", "at least one", ...).
class Grammar {
public:
    Grammar(PosLexicon pos, const Lexicon& modifiers);

    /// Loads pos_lexicon.tsv and modifiers.tsv from `data_dir`.
    static Grammar load(const std::filesystem::path& data_dir);

    const PosLexicon& pos() const noexcept { return pos_; }

    /// Lowercased token sequences recognised at the start of a noun phrase, longest first.
    const std::vector<std::vector<std::string>>& determiner_phrases() const noexcept { return determiners_; }

private:
    PosLexicon pos_;
    std::vector<std::vector<std::string>> determiners_;
};

}  // namespace sicck::parser
