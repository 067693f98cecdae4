#pragma once

// Text forms: "0,1,0,1" or "0 1 0 1" for sequences; patterns also accept a
// compact lowercase word such as "abab".

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dssat/core.hpp"

namespace dssat {

/// Throws std::invalid_argument on empty tokens, non-numeric tokens and
/// negative values.
std::vector<Letter> parse_letters(std::string_view text);

/// Alphabet size defaults to one more than the largest letter.
Sequence parse_sequence(std::string_view text, std::optional<std::size_t> n = std::nullopt);

/// Canonical pattern from a word or a letter list. Throws std::invalid_argument
/// when the text is empty or does not parse.
Pattern parse_pattern(std::string_view text);

std::string format_letters(std::span<const Letter> letters, std::string_view sep = ",");

}  // namespace dssat
