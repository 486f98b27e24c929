#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stylo/preprocess.hpp"

namespace stylo {

// The 16 scalar style measurements plus the document-local top-k word list.
// Scalar order is fixed everywhere (CSV export, vector layout): periods,
// commas, questions, colons, semicolons, blanks, exclamations, dashes,
// underscores, brackets, quotations, slashes, words, sentences, chars,
// chars_per_sentence.
struct StyleFeatures {
    uint64_t periods = 0;
    uint64_t commas = 0;
    uint64_t question_marks = 0;
    uint64_t colons = 0;
    uint64_t semicolons = 0;
    uint64_t blanks = 0;
    uint64_t exclamations = 0;
    uint64_t dashes = 0;
    uint64_t underscores = 0;
    uint64_t brackets = 0;
    uint64_t quotations = 0;
    uint64_t slashes = 0;
    uint64_t word_count = 0;
    uint64_t sentence_count = 0;
    uint64_t char_count = 0;
    double chars_per_sentence = 0.0;
    // exact top-k of normalized word tokens, count descending, ties by word
    std::vector<std::pair<std::string, uint64_t>> topk_words;
};

struct FeatureLayout {
    static constexpr std::size_t kFixedDims = 16;
    std::vector<std::string> vocabulary; // sorted, duplicate-free
    std::size_t dims() const { return kFixedDims + vocabulary.size(); }
};

using FeatureVector = std::vector<double>;

struct Scaler {
    std::vector<double> means;
    std::vector<double> stddevs; // population stddev; dims < 1e-12 scale to 0
};

StyleFeatures extract(const ProcessedText& pt, std::size_t k);

FeatureLayout build_layout(const std::set<std::string>& vocabulary);

// Slots 0-11: punctuation counts / max(char_count, 1). Slots 12-15: word,
// sentence, char counts and chars-per-sentence as-is. Vocabulary slots:
// top-k word count / max(word_count, 1), 0 for absent words.
FeatureVector vectorize(const StyleFeatures& sf, const FeatureLayout& layout);

Scaler fit_scaler(const std::vector<FeatureVector>& train_vectors);
FeatureVector apply_scaler(const Scaler& scaler, const FeatureVector& v);

extern const char* const kFeatureCsvHeader;
std::string feature_csv_row(const std::string& doc_id, const std::string& author_id,
                            const StyleFeatures& sf);

} // namespace stylo
