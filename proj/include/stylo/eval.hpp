#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/model.hpp"

namespace stylo {

struct ClassifierEval {
    double accuracy = 0.0;
    std::vector<std::vector<uint64_t>> confusion; // [true author][predicted author]
    std::map<std::string, double> per_author_recall;
};

struct EvalReport {
    std::vector<std::string> authors;
    std::map<std::string, ClassifierEval> per_classifier; // fuzzy, svm, combined
    std::size_t n_test = 0;
    TrainOptions config;
    // soft check on the expected accuracy ordering combined >= svm >= fuzzy
    bool ordering_holds = false;
    double ordering_tolerance_pp = 5.0;
};

struct ClassifierTiming {
    double train_cpu_seconds = 0.0;
    double predict_cpu_seconds_total = 0.0;
    double predict_per_doc_mean = 0.0;
};

struct TimingReport {
    std::map<std::string, ClassifierTiming> per_classifier;
};

struct EvalResult {
    EvalReport report;
    TimingReport timing;
    CombinedModel model;
};

// Trains on train, predicts every test document with all three classifiers,
// and fills accuracy, confusion and CPU-time reports. Deterministic given
// (corpora, options); timing values excepted. Per-classifier prediction
// times are only measured when opts.threads == 1 (parallel runs report 0).
EvalResult evaluate(const Corpus& train, const Corpus& test, const TrainOptions& opts);

// Stratified k-fold; aggregated confusion is the sum over folds and accuracy
// is pooled.
EvalReport cross_validate(const Corpus& corpus, std::size_t folds, uint64_t seed,
                          const TrainOptions& opts);

std::string render_report_txt(const EvalReport& report);
std::string render_timing_txt(const TimingReport& timing);

// Structured report: JSON text, stable key order, timing under its own key
// so determinism checks can exclude it.
std::string report_to_json(const EvalReport& report, const TimingReport& timing);

} // namespace stylo
