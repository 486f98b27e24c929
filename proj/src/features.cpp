#include "stylo/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "stylo/error.hpp"

namespace stylo {

namespace {

enum class PunctClass {
    None, Period, Comma, Question, Colon, Semicolon, Exclamation,
    Dash, Underscore, Bracket, Quotation, Slash
};

PunctClass classify_punct(uint32_t cp) {
    switch (cp) {
        case '.': return PunctClass::Period;
        case ',': return PunctClass::Comma;
        case '?': return PunctClass::Question;
        case ':': return PunctClass::Colon;
        case ';': return PunctClass::Semicolon;
        case '!': return PunctClass::Exclamation;
        case '-': case 0x2013: case 0x2014: return PunctClass::Dash;
        case '_': return PunctClass::Underscore;
        case '(': case ')': case '{': case '}': case '[': case ']':
            return PunctClass::Bracket;
        case '"': case '`': case 0x2019: case 0x201C: case 0x201D:
            return PunctClass::Quotation;
        case '/': case '\\': return PunctClass::Slash;
        default: return PunctClass::None;
    }
}

} // namespace

StyleFeatures extract(const ProcessedText& pt, std::size_t k) {
    StyleFeatures sf;
    sf.sentence_count = pt.sentence_count;
    sf.char_count = pt.char_count;
    sf.blanks = pt.whitespace_count;

    std::unordered_map<std::string, uint64_t> word_counts;
    for (const Token& t : pt.tokens) {
        if (t.kind == TokenKind::Word) {
            ++sf.word_count;
            ++word_counts[t.normalized];
            continue;
        }
        switch (classify_punct(text::decode_utf8(t.surface, 0).cp)) {
            case PunctClass::Period: ++sf.periods; break;
            case PunctClass::Comma: ++sf.commas; break;
            case PunctClass::Question: ++sf.question_marks; break;
            case PunctClass::Colon: ++sf.colons; break;
            case PunctClass::Semicolon: ++sf.semicolons; break;
            case PunctClass::Exclamation: ++sf.exclamations; break;
            case PunctClass::Dash: ++sf.dashes; break;
            case PunctClass::Underscore: ++sf.underscores; break;
            case PunctClass::Bracket: ++sf.brackets; break;
            case PunctClass::Quotation: ++sf.quotations; break;
            case PunctClass::Slash: ++sf.slashes; break;
            case PunctClass::None: break;
        }
    }

    sf.chars_per_sentence =
        static_cast<double>(sf.char_count) /
        static_cast<double>(std::max<uint64_t>(sf.sentence_count, 1));

    // Documents are small, so the per-document top-k is exact; the
    // Space-Saving sketch is reserved for author-level streams.
    sf.topk_words.assign(word_counts.begin(), word_counts.end());
    std::sort(sf.topk_words.begin(), sf.topk_words.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    if (sf.topk_words.size() > k) sf.topk_words.resize(k);
    return sf;
}

FeatureLayout build_layout(const std::set<std::string>& vocabulary) {
    if (vocabulary.empty()) fail("EmptyVocabulary", "layout needs at least one word");
    FeatureLayout layout;
    layout.vocabulary.assign(vocabulary.begin(), vocabulary.end());
    return layout;
}

FeatureVector vectorize(const StyleFeatures& sf, const FeatureLayout& layout) {
    FeatureVector v(layout.dims(), 0.0);
    const double chars = static_cast<double>(std::max<uint64_t>(sf.char_count, 1));
    v[0] = static_cast<double>(sf.periods) / chars;
    v[1] = static_cast<double>(sf.commas) / chars;
    v[2] = static_cast<double>(sf.question_marks) / chars;
    v[3] = static_cast<double>(sf.colons) / chars;
    v[4] = static_cast<double>(sf.semicolons) / chars;
    v[5] = static_cast<double>(sf.blanks) / chars;
    v[6] = static_cast<double>(sf.exclamations) / chars;
    v[7] = static_cast<double>(sf.dashes) / chars;
    v[8] = static_cast<double>(sf.underscores) / chars;
    v[9] = static_cast<double>(sf.brackets) / chars;
    v[10] = static_cast<double>(sf.quotations) / chars;
    v[11] = static_cast<double>(sf.slashes) / chars;
    v[12] = static_cast<double>(sf.word_count);
    v[13] = static_cast<double>(sf.sentence_count);
    v[14] = static_cast<double>(sf.char_count);
    v[15] = sf.chars_per_sentence;

    const double words = static_cast<double>(std::max<uint64_t>(sf.word_count, 1));
    for (const auto& [word, count] : sf.topk_words) {
        auto it = std::lower_bound(layout.vocabulary.begin(), layout.vocabulary.end(), word);
        if (it != layout.vocabulary.end() && *it == word) {
            v[FeatureLayout::kFixedDims + (it - layout.vocabulary.begin())] =
                static_cast<double>(count) / words;
        }
    }
    return v;
}

Scaler fit_scaler(const std::vector<FeatureVector>& train_vectors) {
    if (train_vectors.size() < 2) fail("InsufficientData", "scaler needs >= 2 vectors");
    const std::size_t dims = train_vectors[0].size();
    for (const FeatureVector& v : train_vectors) {
        if (v.size() != dims) fail("LayoutMismatch", "training vectors disagree on dims");
    }

    Scaler s;
    s.means.assign(dims, 0.0);
    s.stddevs.assign(dims, 0.0);
    const double n = static_cast<double>(train_vectors.size());
    for (const FeatureVector& v : train_vectors) {
        for (std::size_t d = 0; d < dims; ++d) s.means[d] += v[d];
    }
    for (std::size_t d = 0; d < dims; ++d) s.means[d] /= n;
    for (const FeatureVector& v : train_vectors) {
        for (std::size_t d = 0; d < dims; ++d) {
            const double delta = v[d] - s.means[d];
            s.stddevs[d] += delta * delta;
        }
    }
    for (std::size_t d = 0; d < dims; ++d) s.stddevs[d] = std::sqrt(s.stddevs[d] / n);
    return s;
}

FeatureVector apply_scaler(const Scaler& scaler, const FeatureVector& v) {
    if (v.size() != scaler.means.size()) {
        fail("LayoutMismatch", "vector dims do not match scaler");
    }
    FeatureVector out(v.size());
    for (std::size_t d = 0; d < v.size(); ++d) {
        // constant training dimension: carries no information, map to 0
        out[d] = scaler.stddevs[d] < 1e-12 ? 0.0
                                           : (v[d] - scaler.means[d]) / scaler.stddevs[d];
    }
    return out;
}

const char* const kFeatureCsvHeader =
    "doc_id,author_id,periods,commas,questions,colons,semicolons,blanks,"
    "exclamations,dashes,underscores,brackets,quotations,slashes,words,"
    "sentences,chars,chars_per_sentence";

namespace {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

std::string feature_csv_row(const std::string& doc_id, const std::string& author_id,
                            const StyleFeatures& sf) {
    std::string row = doc_id + ',' + author_id;
    for (uint64_t c : {sf.periods, sf.commas, sf.question_marks, sf.colons,
                       sf.semicolons, sf.blanks, sf.exclamations, sf.dashes,
                       sf.underscores, sf.brackets, sf.quotations, sf.slashes,
                       sf.word_count, sf.sentence_count, sf.char_count}) {
        row += ',';
        row += std::to_string(c);
    }
    row += ',';
    row += format_double(sf.chars_per_sentence);
    return row;
}

} // namespace stylo
