#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sicck {

std::string_view trim(std::string_view s) noexcept;

/// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits on runs of ASCII whitespace, dropping empty fields.
std::vector<std::string_view> split_whitespace(std::string_view s);

/// Lines without their terminators; a trailing newline does not produce an empty last line. Handles CRLF.
std::vector<std::string_view> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Whole file as bytes. Throws ConfigError if unreadable.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace sicck
