#include "stylo/ensemble.hpp"

#include "stylo/error.hpp"

namespace stylo {

EnsembleWeights fit_weights(double acc_fuzzy, double acc_svm) {
    if (acc_fuzzy < 0.0 || acc_fuzzy > 1.0 || acc_svm < 0.0 || acc_svm > 1.0) {
        fail("InvalidInput", "accuracies must lie in [0,1]");
    }
    EnsembleWeights w;
    w.acc_fuzzy = acc_fuzzy;
    w.acc_svm = acc_svm;
    const double total = acc_fuzzy + acc_svm;
    if (total == 0.0) {
        w.degenerate = true; // DegenerateValidation: no signal, split evenly
        w.w_fuzzy = 0.5;
        w.w_svm = 0.5;
    } else {
        w.w_fuzzy = acc_fuzzy / total;
        w.w_svm = acc_svm / total;
    }
    return w;
}

Prediction combine(const Prediction& p_fuzzy, const Prediction& p_svm,
                   const EnsembleWeights& w) {
    if (p_fuzzy.scores.size() != p_svm.scores.size()) {
        fail("IncompatiblePredictions", "author sets differ");
    }
    std::map<std::string, double> raw;
    for (const auto& [author, fuzzy_score] : p_fuzzy.scores) {
        auto it = p_svm.scores.find(author);
        if (it == p_svm.scores.end()) {
            fail("IncompatiblePredictions", "author sets differ: " + author);
        }
        raw[author] = w.w_fuzzy * fuzzy_score + w.w_svm * it->second;
    }
    return make_prediction(std::move(raw), ClassifierKind::Combined);
}

} // namespace stylo
