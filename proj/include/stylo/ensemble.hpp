#pragma once

#include "stylo/prediction.hpp"

namespace stylo {

// Reliability weights learned from held-out validation accuracies.
struct EnsembleWeights {
    double w_fuzzy = 0.5;
    double w_svm = 0.5;
    double acc_fuzzy = 0.0; // validation accuracies that produced the weights
    double acc_svm = 0.0;
    bool degenerate = false; // both accuracies were zero; fell back to 0.5/0.5
};

// w_c = acc_c / (acc_fuzzy + acc_svm); equal accuracies give 0.5/0.5.
EnsembleWeights fit_weights(double acc_fuzzy, double acc_svm);

// Weighted sum of the two predictions' normalized scores. When both input
// winners agree, the combined winner is that author for any weights.
Prediction combine(const Prediction& p_fuzzy, const Prediction& p_svm,
                   const EnsembleWeights& w);

} // namespace stylo
