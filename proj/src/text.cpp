#include "dssat/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace dssat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Letter parse_token(std::string_view tok, std::string_view whole) {
  Letter value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || value < 0)
    throw std::invalid_argument("bad letter '" + std::string(tok) + "' in \"" +
                                std::string(whole) + "\"");
  return value;
}

}  // namespace

std::vector<Letter> parse_letters(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<Letter> out;
  if (body.empty()) return out;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const std::string_view tok =
          trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
      out.push_back(parse_token(tok, text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    std::size_t j = i;
    while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    out.push_back(parse_token(body.substr(i, j - i), text));
    i = j;
  }
  return out;
}

Sequence parse_sequence(std::string_view text, std::optional<std::size_t> n) {
  std::vector<Letter> letters = parse_letters(text);
  if (n) return Sequence(std::move(letters), *n);
  return Sequence::over_used_letters(std::move(letters));
}

Pattern parse_pattern(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty pattern");
  if (std::all_of(body.begin(), body.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
    std::vector<Letter> letters;
    for (char c : body) letters.push_back(c - 'a');
    return Pattern(letters);
  }
  return Pattern(parse_letters(body));
}

std::string format_letters(std::span<const Letter> letters, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(letters[i]);
  }
  return out;
}

}  // namespace dssat
