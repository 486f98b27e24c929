#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stylo/features.hpp"
#include "stylo/prediction.hpp"

namespace stylo {

struct SvmParams {
    double c = 1.0;          // box constraint
    double gamma = 0.0;      // RBF width; 0 -> 1/dims at train time
    double tol = 1e-3;       // KKT tolerance
    std::size_t max_passes = 200;

    void validate() const;
};

// Trained one-vs-rest binary machine. Support vectors are indices into the
// owning model's training matrix; coeffs hold alpha_i * y_i.
struct BinarySvm {
    std::vector<uint32_t> sv_indices;
    std::vector<double> coeffs;
    double bias = 0.0;
    bool converged = false;
};

struct LabeledVectors {
    FeatureLayout layout;
    std::vector<std::string> doc_ids;
    std::vector<std::string> author_ids;
    std::vector<FeatureVector> vectors; // unscaled
};

struct MultiSvmModel {
    std::vector<std::string> authors;            // sorted
    FeatureLayout layout;
    Scaler scaler;
    std::vector<FeatureVector> training_matrix;  // scaled, canonical doc order
    std::vector<BinarySvm> machines;             // parallel to authors
    SvmParams params;
    double gamma = 0.0;                          // resolved value
};

// exp(-gamma * ||x - y||^2)
double rbf_kernel(const FeatureVector& x, const FeatureVector& y, double gamma);

// SMO-style dual ascent: sequential KKT scan for the first index, second
// index by maximum |E_i - E_j| with a deterministic fallback scan when the
// preferred pair cannot make progress. Converges when a full pass finds no
// violator beyond tol, or stops after max_passes.
BinarySvm train_binary(const std::vector<FeatureVector>& x, const std::vector<int>& y,
                       const SvmParams& params, double gamma);

// One-vs-rest over authors; input is canonically re-sorted by doc_id, the
// scaler is fit on the training vectors, and machines are trained on scaled
// vectors.
MultiSvmModel train_multiclass(const LabeledVectors& train, const SvmParams& params);

double decision_value(const std::vector<FeatureVector>& training_matrix, double gamma,
                      const BinarySvm& machine, const FeatureVector& scaled);

// Scales the vector and reports per-author decision values.
Prediction predict_vector(const MultiSvmModel& model, const FeatureVector& unscaled);

// Full path from a processed text: extract -> vectorize -> scale -> decide.
Prediction predict_svm(const MultiSvmModel& model, const ProcessedText& pt,
                       std::size_t k);

// Dual objective of a trained machine, recomputable from the stored state.
double dual_objective(const MultiSvmModel& model, const BinarySvm& machine);

} // namespace stylo
