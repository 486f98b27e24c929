#include "stylo/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stylo/error.hpp"

namespace stylo {

void SvmParams::validate() const {
    if (c <= 0.0 || tol <= 0.0 || gamma < 0.0 || max_passes == 0) {
        fail("InvalidInput", "SVM parameters must be positive");
    }
}

double rbf_kernel(const FeatureVector& x, const FeatureVector& y, double gamma) {
    if (x.size() != y.size()) fail("LayoutMismatch", "kernel inputs disagree on dims");
    double sq = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double diff = x[d] - y[d];
        sq += diff * diff;
    }
    return std::exp(-gamma * sq);
}

namespace {

struct SmoState {
    const std::vector<int>& y;
    const std::vector<std::vector<double>>& kernel;
    double c;
    std::vector<double> alpha;
    double bias = 0.0;

    double decision(std::size_t i) const {
        double sum = bias;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] != 0.0) sum += alpha[j] * y[j] * kernel[j][i];
        }
        return sum;
    }
};

// Two-variable update; returns false when the pair cannot make progress.
bool smo_step(SmoState& s, std::size_t i, std::size_t j, double e_i) {
    if (i == j) return false;
    const double e_j = s.decision(j) - s.y[j];
    const double alpha_i_old = s.alpha[i];
    const double alpha_j_old = s.alpha[j];

    double lo, hi;
    if (s.y[i] != s.y[j]) {
        lo = std::max(0.0, alpha_j_old - alpha_i_old);
        hi = std::min(s.c, s.c + alpha_j_old - alpha_i_old);
    } else {
        lo = std::max(0.0, alpha_i_old + alpha_j_old - s.c);
        hi = std::min(s.c, alpha_i_old + alpha_j_old);
    }
    if (hi - lo < 1e-12) return false;

    const double eta = 2.0 * s.kernel[i][j] - s.kernel[i][i] - s.kernel[j][j];
    if (eta >= -1e-12) return false;

    double alpha_j = alpha_j_old - s.y[j] * (e_i - e_j) / eta;
    alpha_j = std::clamp(alpha_j, lo, hi);
    if (std::abs(alpha_j - alpha_j_old) < 1e-12) return false;
    const double alpha_i =
        alpha_i_old + s.y[i] * s.y[j] * (alpha_j_old - alpha_j);

    const double b1 = s.bias - e_i - s.y[i] * (alpha_i - alpha_i_old) * s.kernel[i][i] -
                      s.y[j] * (alpha_j - alpha_j_old) * s.kernel[i][j];
    const double b2 = s.bias - e_j - s.y[i] * (alpha_i - alpha_i_old) * s.kernel[i][j] -
                      s.y[j] * (alpha_j - alpha_j_old) * s.kernel[j][j];
    if (alpha_i > 0.0 && alpha_i < s.c) {
        s.bias = b1;
    } else if (alpha_j > 0.0 && alpha_j < s.c) {
        s.bias = b2;
    } else {
        s.bias = 0.5 * (b1 + b2);
    }
    s.alpha[i] = alpha_i;
    s.alpha[j] = alpha_j;
    return true;
}

} // namespace

BinarySvm train_binary(const std::vector<FeatureVector>& x, const std::vector<int>& y,
                       const SvmParams& params, double gamma) {
    params.validate();
    if (x.size() != y.size() || x.size() < 2) {
        fail("InvalidInput", "need >= 2 labeled vectors");
    }
    bool has_pos = false, has_neg = false;
    for (int label : y) {
        if (label == 1) has_pos = true;
        else if (label == -1) has_neg = true;
        else fail("InvalidInput", "labels must be +1/-1");
    }
    if (!has_pos || !has_neg) fail("DegenerateLabels", "both classes required");
    for (const FeatureVector& v : x) {
        for (double value : v) {
            if (!std::isfinite(value)) fail("InvalidInput", "non-finite feature value");
        }
    }

    const std::size_t n = x.size();
    std::vector<std::vector<double>> kernel(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            kernel[i][j] = kernel[j][i] = rbf_kernel(x[i], x[j], gamma);
        }
    }

    SmoState s{y, kernel, params.c, std::vector<double>(n, 0.0), 0.0};
    bool converged = false;
    for (std::size_t pass = 0; pass < params.max_passes; ++pass) {
        std::size_t violations = 0;
        std::size_t changes = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e_i = s.decision(i) - y[i];
            const double r = e_i * y[i];
            const bool violates = (r < -params.tol && s.alpha[i] < params.c) ||
                                  (r > params.tol && s.alpha[i] > 0.0);
            if (!violates) continue;
            ++violations;

            // preferred partner: maximum |E_i - E_j|, smallest index on ties
            std::size_t best_j = n;
            double best_gap = -1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const double gap = std::abs(e_i - (s.decision(j) - y[j]));
                if (gap > best_gap) {
                    best_gap = gap;
                    best_j = j;
                }
            }
            if (best_j < n && smo_step(s, i, best_j, e_i)) {
                ++changes;
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == best_j) continue;
                if (smo_step(s, i, j, e_i)) {
                    ++changes;
                    break;
                }
            }
        }
        if (violations == 0) {
            converged = true;
            break;
        }
        if (changes == 0) break; // violators remain but no pair can move
    }

    BinarySvm model;
    model.converged = converged;
    model.bias = s.bias;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.alpha[i] > 0.0) {
            model.sv_indices.push_back(static_cast<uint32_t>(i));
            model.coeffs.push_back(s.alpha[i] * y[i]);
        }
    }
    return model;
}

MultiSvmModel train_multiclass(const LabeledVectors& train, const SvmParams& params) {
    params.validate();
    if (train.vectors.size() != train.author_ids.size() ||
        train.vectors.size() != train.doc_ids.size()) {
        fail("InvalidInput", "labeled vectors are misaligned");
    }

    MultiSvmModel model;
    model.layout = train.layout;
    model.params = params;
    for (const std::string& a : train.author_ids) {
        if (std::find(model.authors.begin(), model.authors.end(), a) ==
            model.authors.end()) {
            model.authors.push_back(a);
        }
    }
    std::sort(model.authors.begin(), model.authors.end());
    if (model.authors.size() < 2) fail("NeedsTwoClasses", "need >= 2 authors");

    // canonical doc_id order makes training invariant to input permutation
    std::vector<std::size_t> order(train.vectors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return train.doc_ids[a] < train.doc_ids[b];
    });

    std::vector<FeatureVector> raw;
    std::vector<std::string> owners;
    raw.reserve(order.size());
    for (std::size_t idx : order) {
        raw.push_back(train.vectors[idx]);
        owners.push_back(train.author_ids[idx]);
    }

    model.scaler = fit_scaler(raw);
    model.training_matrix.reserve(raw.size());
    for (const FeatureVector& v : raw) {
        model.training_matrix.push_back(apply_scaler(model.scaler, v));
    }

    model.gamma = params.gamma > 0.0
                      ? params.gamma
                      : 1.0 / static_cast<double>(model.training_matrix[0].size());

    for (const std::string& author : model.authors) {
        std::vector<int> y;
        y.reserve(owners.size());
        for (const std::string& owner : owners) {
            y.push_back(owner == author ? 1 : -1);
        }
        model.machines.push_back(
            train_binary(model.training_matrix, y, params, model.gamma));
    }
    return model;
}

double decision_value(const std::vector<FeatureVector>& training_matrix, double gamma,
                      const BinarySvm& machine, const FeatureVector& scaled) {
    double sum = machine.bias;
    for (std::size_t s = 0; s < machine.sv_indices.size(); ++s) {
        sum += machine.coeffs[s] *
               rbf_kernel(training_matrix[machine.sv_indices[s]], scaled, gamma);
    }
    return sum;
}

Prediction predict_vector(const MultiSvmModel& model, const FeatureVector& unscaled) {
    if (unscaled.size() != model.scaler.means.size()) {
        fail("IncompatibleModel", "vector dims do not match the trained model");
    }
    const FeatureVector scaled = apply_scaler(model.scaler, unscaled);
    std::map<std::string, double> scores;
    for (std::size_t a = 0; a < model.authors.size(); ++a) {
        scores[model.authors[a]] =
            decision_value(model.training_matrix, model.gamma, model.machines[a], scaled);
    }
    return make_prediction(std::move(scores), ClassifierKind::Svm);
}

Prediction predict_svm(const MultiSvmModel& model, const ProcessedText& pt,
                       std::size_t k) {
    const StyleFeatures sf = extract(pt, k);
    return predict_vector(model, vectorize(sf, model.layout));
}

double dual_objective(const MultiSvmModel& model, const BinarySvm& machine) {
    double sum_alpha = 0.0;
    for (double c : machine.coeffs) sum_alpha += std::abs(c);
    double quad = 0.0;
    for (std::size_t a = 0; a < machine.sv_indices.size(); ++a) {
        for (std::size_t b = 0; b < machine.sv_indices.size(); ++b) {
            quad += machine.coeffs[a] * machine.coeffs[b] *
                    rbf_kernel(model.training_matrix[machine.sv_indices[a]],
                               model.training_matrix[machine.sv_indices[b]],
                               model.gamma);
        }
    }
    return sum_alpha - 0.5 * quad;
}

} // namespace stylo
