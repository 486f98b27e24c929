#include "stylo/prediction.hpp"

#include <limits>

#include "stylo/error.hpp"

namespace stylo {

const char* classifier_name(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::Fuzzy: return "fuzzy";
        case ClassifierKind::Svm: return "svm";
        case ClassifierKind::Combined: return "combined";
    }
    return "unknown";
}

Prediction make_prediction(std::map<std::string, double> raw_scores,
                           ClassifierKind source) {
    if (raw_scores.empty()) fail("InvalidInput", "prediction needs at least one author");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& [author, score] : raw_scores) {
        lo = std::min(lo, score);
        hi = std::max(hi, score);
    }

    Prediction p;
    p.source = source;
    const double span = hi - lo;
    for (const auto& [author, score] : raw_scores) {
        p.scores[author] = span > 0.0 ? (score - lo) / span : 0.0;
    }
    p.raw_scores = std::move(raw_scores);

    // std::map iterates authors in ascending order, so keeping the first
    // strict maximum realizes the lexicographic tie-break.
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [author, score] : p.scores) {
        if (score > best) {
            best = score;
            p.winner = author;
        }
    }
    return p;
}

} // namespace stylo
