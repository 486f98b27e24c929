#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/ensemble.hpp"
#include "stylo/fuzzy.hpp"
#include "stylo/svm.hpp"

namespace stylo {

struct TrainOptions {
    FingerprintConfig fingerprint;
    SvmParams svm;
    double validation_fraction = 0.2; // carved from train for ensemble weights
    uint64_t seed = 0;
    std::size_t threads = 1;
};

// Everything needed to attribute a new text: per-author fingerprints, the
// one-vs-rest SVM (which owns the layout and scaler), and ensemble weights.
struct CombinedModel {
    static constexpr int kFormatVersion = 1;
    std::vector<std::string> authors;
    FingerprintConfig fingerprint_config;
    std::map<std::string, FuzzyFingerprint> fingerprints;
    MultiSvmModel svm;
    EnsembleWeights weights;
};

// CPU seconds spent in each training phase.
struct TrainTimings {
    double fuzzy = 0.0;
    double svm = 0.0;
    double combined = 0.0; // whole call, including the validation carve
};

std::vector<ProcessedText> preprocess_corpus(const Corpus& corpus, std::size_t threads);

std::map<std::string, FuzzyFingerprint> build_fingerprints(
    const Corpus& corpus, const std::vector<ProcessedText>& processed,
    const FingerprintConfig& cfg);

FeatureLayout layout_from_fingerprints(
    const std::map<std::string, FuzzyFingerprint>& fingerprints);

LabeledVectors featurize(const Corpus& corpus,
                         const std::vector<ProcessedText>& processed,
                         const FeatureLayout& layout, std::size_t k,
                         std::size_t threads);

CombinedModel train_combined(const Corpus& train, const TrainOptions& opts,
                             TrainTimings* timings = nullptr);

Prediction predict_fuzzy(const CombinedModel& model, const ProcessedText& pt);
Prediction predict_svm(const CombinedModel& model, const ProcessedText& pt);
Prediction predict_combined(const CombinedModel& model, const ProcessedText& pt);
Prediction predict(const CombinedModel& model, const ProcessedText& pt,
                   ClassifierKind kind);

// Versioned JSON model file; loading a trained model reproduces its
// predictions exactly.
void save_model(const CombinedModel& model, const std::filesystem::path& path);
CombinedModel load_model(const std::filesystem::path& path);

} // namespace stylo
