#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

enum class TokenKind { Word, Punctuation };

struct Token {
    TokenKind kind;
    std::string surface;     // original characters, UTF-8
    std::string normalized;  // Word: lowercased stem; Punctuation: surface unchanged
};

struct ProcessedText {
    std::vector<Token> tokens;
    std::size_t sentence_count = 0;
    std::size_t char_count = 0;       // non-whitespace codepoints in the raw text
    std::size_t whitespace_count = 0; // raw blank count, consumed by feature extraction
};

// Maximal runs of letters/digits (plus '/'-free embedded ' and - flanked by
// letters on both sides) become Word tokens; every other non-whitespace
// codepoint becomes a one-codepoint Punctuation token. Whitespace separates
// tokens and is discarded. Total: concatenated surfaces equal the input with
// whitespace removed.
std::vector<Token> tokenize(std::string_view text);

// Ordered suffix-stripping rules on a lowercase word, longest suffix first,
// each guarded by minimum stem length 3, iterated to a fixed point. Never
// lengthens, never returns empty, idempotent.
std::string stem(const std::string& word);

ProcessedText preprocess(std::string_view text);

namespace text {

struct Decoded {
    uint32_t cp;     // codepoint; invalid bytes map to 0x110000 + byte value
    std::size_t len; // bytes consumed, >= 1
};

Decoded decode_utf8(std::string_view s, std::size_t pos);
bool valid_utf8(std::string_view s);
std::size_t codepoint_count(std::string_view s);

bool is_whitespace(uint32_t cp);
bool is_word_char(uint32_t cp); // letter or digit
bool is_letter(uint32_t cp);
uint32_t to_lower(uint32_t cp);
std::string lowercase(std::string_view word);

} // namespace text

} // namespace stylo
