#include "stylo/preprocess.hpp"

#include <array>
#include <cstring>

namespace stylo {
namespace text {

// Invalid bytes decode to a sentinel above the Unicode range so they fall
// through every class test and end up as Punctuation, keeping tokenize total.
static constexpr uint32_t kInvalidBase = 0x110000;

Decoded decode_utf8(std::string_view s, std::size_t pos) {
    const auto b = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
    unsigned char c0 = b(pos);
    if (c0 < 0x80) return {c0, 1};

    auto invalid = [&]() -> Decoded { return {kInvalidBase + c0, 1}; };
    auto cont = [&](std::size_t i) {
        return pos + i < s.size() && (b(pos + i) & 0xC0) == 0x80;
    };

    if ((c0 & 0xE0) == 0xC0) {
        if (!cont(1)) return invalid();
        uint32_t cp = (uint32_t(c0 & 0x1F) << 6) | (b(pos + 1) & 0x3F);
        if (cp < 0x80) return invalid(); // overlong
        return {cp, 2};
    }
    if ((c0 & 0xF0) == 0xE0) {
        if (!cont(1) || !cont(2)) return invalid();
        uint32_t cp = (uint32_t(c0 & 0x0F) << 12) | (uint32_t(b(pos + 1) & 0x3F) << 6) |
                      (b(pos + 2) & 0x3F);
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return invalid();
        return {cp, 3};
    }
    if ((c0 & 0xF8) == 0xF0) {
        if (!cont(1) || !cont(2) || !cont(3)) return invalid();
        uint32_t cp = (uint32_t(c0 & 0x07) << 18) | (uint32_t(b(pos + 1) & 0x3F) << 12) |
                      (uint32_t(b(pos + 2) & 0x3F) << 6) | (b(pos + 3) & 0x3F);
        if (cp < 0x10000 || cp > 0x10FFFF) return invalid();
        return {cp, 4};
    }
    return invalid();
}

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        Decoded d = decode_utf8(s, i);
        if (d.cp >= kInvalidBase) return false;
        i += d.len;
    }
    return true;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t i = 0, n = 0;
    while (i < s.size()) {
        i += decode_utf8(s, i).len;
        ++n;
    }
    return n;
}

bool is_whitespace(uint32_t cp) {
    switch (cp) {
        case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
        case 0x00A0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

// Non-ASCII, non-whitespace codepoints count as letters unless they sit in a
// recognized punctuation/symbol range. This keeps accented words intact while
// typographic quotes and dashes still tokenize as punctuation.
static bool is_punct_codepoint(uint32_t cp) {
    if (cp >= kInvalidBase) return true;
    if (cp >= 0xA1 && cp <= 0xBF && cp != 0xAA && cp != 0xB5 && cp != 0xBA) return true;
    if (cp == 0xD7 || cp == 0xF7) return true;
    if (cp >= 0x2000 && cp <= 0x206F) return true; // general punctuation
    if (cp >= 0x2E00 && cp <= 0x2E7F) return true; // supplemental punctuation
    if (cp >= 0x3000 && cp <= 0x303F) return true; // CJK punctuation
    return false;
}

bool is_letter(uint32_t cp) {
    if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    if (is_whitespace(cp) || is_punct_codepoint(cp)) return false;
    return cp > 0xA0 || cp == 0xAA || cp == 0xB5 || cp == 0xBA;
}

bool is_word_char(uint32_t cp) {
    if (cp < 0x80) return (cp >= '0' && cp <= '9') || is_letter(cp);
    return is_letter(cp);
}

uint32_t to_lower(uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20; // Latin-1
    return cp;
}

static void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string lowercase(std::string_view word) {
    std::string out;
    out.reserve(word.size());
    std::size_t i = 0;
    while (i < word.size()) {
        Decoded d = decode_utf8(word, i);
        if (d.cp >= kInvalidBase) {
            out.push_back(word[i]);
        } else {
            append_utf8(out, to_lower(d.cp));
        }
        i += d.len;
    }
    return out;
}

} // namespace text

namespace {

struct Cp {
    uint32_t cp;
    std::size_t offset;
    std::size_t len;
};

std::vector<Cp> decode_all(std::string_view s) {
    std::vector<Cp> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        text::Decoded d = text::decode_utf8(s, i);
        cps.push_back({d.cp, i, d.len});
        i += d.len;
    }
    return cps;
}

} // namespace

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> tokens;
    std::vector<Cp> cps = decode_all(input);
    const std::size_t n = cps.size();

    std::size_t i = 0;
    while (i < n) {
        if (text::is_whitespace(cps[i].cp)) {
            ++i;
            continue;
        }
        if (text::is_word_char(cps[i].cp)) {
            std::size_t j = i + 1;
            while (j < n) {
                uint32_t cp = cps[j].cp;
                if (text::is_word_char(cp)) {
                    ++j;
                    continue;
                }
                // ' and - join a word only when flanked by letters on both sides
                if ((cp == '\'' || cp == '-') && text::is_letter(cps[j - 1].cp) &&
                    j + 1 < n && text::is_letter(cps[j + 1].cp)) {
                    j += 2;
                    continue;
                }
                break;
            }
            std::size_t begin = cps[i].offset;
            std::size_t end = cps[j - 1].offset + cps[j - 1].len;
            tokens.push_back({TokenKind::Word,
                              std::string(input.substr(begin, end - begin)), {}});
            i = j;
        } else {
            tokens.push_back({TokenKind::Punctuation,
                              std::string(input.substr(cps[i].offset, cps[i].len)), {}});
            tokens.back().normalized = tokens.back().surface;
            ++i;
        }
    }
    return tokens;
}

namespace {

constexpr std::size_t kMinStem = 3;

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Consonant-pair endings that take back the silent 'e' dropped before
// "ing"/"ed" ("circl" -> "circle", "danc" -> "dance", "serv" -> "serve").
bool restores_e(const std::string& stem) {
    static constexpr std::array<const char*, 19> endings = {
        "bl", "cl", "dl", "fl", "gl", "kl", "pl", "sl", "tl", "zl",
        "dg", "rg", "nc", "rc", "rv", "lv", "rs", "ns", "ps"};
    for (const char* e : endings) {
        if (ends_with(stem, e)) return true;
    }
    return false;
}

// One rule application; returns false when no rule fires. Longest suffixes
// are tried first, each guarded by the minimum stem length.
bool stem_step(std::string& w) {
    struct Rule {
        std::string_view suffix;
        std::string_view replacement;
        bool restore_e;
    };
    // length-descending: sses, ies/ing/est, ed/er/ly, s
    static constexpr Rule rules[] = {
        {"sses", "ss", false},
        {"ies", "y", false},
        {"ing", "", true},
        {"est", "", false},
        {"ed", "", true},
        {"er", "", false},
        {"ly", "", false},
        {"s", "", false},
    };
    for (const Rule& r : rules) {
        if (!ends_with(w, r.suffix)) continue;
        if (r.suffix == "s" && ends_with(w, "ss")) continue;
        std::string candidate = w.substr(0, w.size() - r.suffix.size());
        candidate += r.replacement;
        if (candidate.size() < kMinStem) continue;
        if (r.restore_e && restores_e(candidate)) candidate += 'e';
        w = std::move(candidate);
        return true;
    }
    return false;
}

} // namespace

std::string stem(const std::string& word) {
    std::string w = word;
    // Iterate to a fixed point: a single application is not idempotent
    // ("feelings" -> "feeling" -> "feel"). Each firing strictly shortens
    // the word, so this terminates.
    while (stem_step(w)) {
    }
    return w;
}

ProcessedText preprocess(std::string_view input) {
    ProcessedText pt;
    pt.tokens = tokenize(input);

    for (Token& t : pt.tokens) {
        if (t.kind == TokenKind::Word) {
            t.normalized = stem(text::lowercase(t.surface));
        }
        pt.char_count += text::codepoint_count(t.surface);
    }

    std::size_t i = 0;
    while (i < input.size()) {
        text::Decoded d = text::decode_utf8(input, i);
        if (text::is_whitespace(d.cp)) ++pt.whitespace_count;
        i += d.len;
    }

    // A sentence boundary is a maximal run of terminator tokens; "..." and
    // "?!" each count once.
    auto is_terminator = [](const Token& t) {
        return t.kind == TokenKind::Punctuation &&
               (t.surface == "." || t.surface == "!" || t.surface == "?");
    };
    bool in_run = false;
    for (const Token& t : pt.tokens) {
        if (is_terminator(t)) {
            if (!in_run) {
                ++pt.sentence_count;
                in_run = true;
            }
        } else {
            in_run = false;
        }
    }
    if (pt.sentence_count == 0 && !pt.tokens.empty()) pt.sentence_count = 1;
    return pt;
}

} // namespace stylo
