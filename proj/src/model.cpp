#include "stylo/model.hpp"

#include <set>

#include "stylo/cpu_time.hpp"
#include "stylo/error.hpp"
#include "stylo/parallel.hpp"

namespace stylo {

std::vector<ProcessedText> preprocess_corpus(const Corpus& corpus, std::size_t threads) {
    std::vector<ProcessedText> out(corpus.size());
    parallel_for(corpus.size(), threads,
                 [&](std::size_t i) { out[i] = preprocess(corpus.documents()[i].text); });
    return out;
}

std::map<std::string, FuzzyFingerprint> build_fingerprints(
    const Corpus& corpus, const std::vector<ProcessedText>& processed,
    const FingerprintConfig& cfg) {
    std::map<std::string, FuzzyFingerprint> fps;
    for (const std::string& author : corpus.authors()) {
        std::vector<const ProcessedText*> docs;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (corpus.documents()[i].author_id == author) docs.push_back(&processed[i]);
        }
        fps[author] = build_author_fingerprint(docs, cfg, author);
    }
    return fps;
}

FeatureLayout layout_from_fingerprints(
    const std::map<std::string, FuzzyFingerprint>& fingerprints) {
    std::set<std::string> vocab;
    for (const auto& [author, fp] : fingerprints) {
        for (const auto& [word, mu] : fp.entries) vocab.insert(word);
    }
    return build_layout(vocab);
}

LabeledVectors featurize(const Corpus& corpus,
                         const std::vector<ProcessedText>& processed,
                         const FeatureLayout& layout, std::size_t k,
                         std::size_t threads) {
    LabeledVectors lv;
    lv.layout = layout;
    lv.doc_ids.reserve(corpus.size());
    lv.author_ids.reserve(corpus.size());
    for (const Document& d : corpus.documents()) {
        lv.doc_ids.push_back(d.doc_id);
        lv.author_ids.push_back(d.author_id);
    }
    lv.vectors.assign(corpus.size(), {});
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        lv.vectors[i] = vectorize(extract(processed[i], k), layout);
    });
    return lv;
}

namespace {

struct Classifiers {
    std::map<std::string, FuzzyFingerprint> fingerprints;
    MultiSvmModel svm;
};

Classifiers train_classifiers(const Corpus& corpus, const TrainOptions& opts,
                              double* fuzzy_seconds, double* svm_seconds) {
    const std::vector<ProcessedText> processed =
        preprocess_corpus(corpus, opts.threads);

    Classifiers cls;
    double t0 = cpu_seconds();
    cls.fingerprints = build_fingerprints(corpus, processed, opts.fingerprint);
    double t1 = cpu_seconds();

    const FeatureLayout layout = layout_from_fingerprints(cls.fingerprints);
    const LabeledVectors lv =
        featurize(corpus, processed, layout, opts.fingerprint.k, opts.threads);
    cls.svm = train_multiclass(lv, opts.svm);
    double t2 = cpu_seconds();

    if (fuzzy_seconds) *fuzzy_seconds += t1 - t0;
    if (svm_seconds) *svm_seconds += t2 - t1;
    return cls;
}

// Accuracy of each classifier on a held-out slice, for weight fitting.
std::pair<double, double> validation_accuracies(const Classifiers& cls,
                                                const Corpus& validation,
                                                const FingerprintConfig& cfg,
                                                std::size_t threads) {
    const std::vector<ProcessedText> processed =
        preprocess_corpus(validation, threads);
    std::size_t fuzzy_hits = 0, svm_hits = 0;
    for (std::size_t i = 0; i < validation.size(); ++i) {
        const std::string& truth = validation.documents()[i].author_id;
        if (classify_fuzzy(processed[i], cls.fingerprints, cfg).winner == truth) {
            ++fuzzy_hits;
        }
        if (predict_svm(cls.svm, processed[i], cfg.k).winner == truth) ++svm_hits;
    }
    const double n = static_cast<double>(validation.size());
    return {fuzzy_hits / n, svm_hits / n};
}

} // namespace

CombinedModel train_combined(const Corpus& train, const TrainOptions& opts,
                             TrainTimings* timings) {
    opts.fingerprint.validate();
    opts.svm.validate();
    if (train.authors().size() < 2) fail("NeedsTwoClasses", "need >= 2 authors");

    const double t0 = cpu_seconds();

    // Reliability weights come from a validation carve of the training
    // split; the final classifiers are then retrained on all of it.
    EnsembleWeights weights;
    bool carved = true;
    for (const std::string& author : train.authors()) {
        std::size_t n = 0;
        for (const Document& d : train.documents()) n += d.author_id == author;
        if (n < 2) carved = false;
    }
    if (carved) {
        SplitSpec vs{1.0 - opts.validation_fraction, opts.seed};
        auto [fit_part, val_part] = split(train, vs);
        Classifiers partial = train_classifiers(fit_part, opts, nullptr, nullptr);
        auto [acc_fuzzy, acc_svm] =
            validation_accuracies(partial, val_part, opts.fingerprint, opts.threads);
        weights = fit_weights(acc_fuzzy, acc_svm);
    } else {
        weights = fit_weights(0.0, 0.0); // too few documents to carve a slice
    }

    CombinedModel model;
    model.fingerprint_config = opts.fingerprint;
    model.weights = weights;
    model.authors = train.authors();

    double fuzzy_s = 0.0, svm_s = 0.0;
    Classifiers cls = train_classifiers(train, opts, &fuzzy_s, &svm_s);
    model.fingerprints = std::move(cls.fingerprints);
    model.svm = std::move(cls.svm);

    if (timings) {
        timings->fuzzy = fuzzy_s;
        timings->svm = svm_s;
        timings->combined = cpu_seconds() - t0;
    }
    return model;
}

Prediction predict_fuzzy(const CombinedModel& model, const ProcessedText& pt) {
    return classify_fuzzy(pt, model.fingerprints, model.fingerprint_config);
}

Prediction predict_svm(const CombinedModel& model, const ProcessedText& pt) {
    return predict_svm(model.svm, pt, model.fingerprint_config.k);
}

Prediction predict_combined(const CombinedModel& model, const ProcessedText& pt) {
    return combine(predict_fuzzy(model, pt), predict_svm(model, pt), model.weights);
}

Prediction predict(const CombinedModel& model, const ProcessedText& pt,
                   ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::Fuzzy: return predict_fuzzy(model, pt);
        case ClassifierKind::Svm: return predict_svm(model, pt);
        case ClassifierKind::Combined: return predict_combined(model, pt);
    }
    fail("InvalidInput", "unknown classifier kind");
}

} // namespace stylo
