#pragma once

#include <map>
#include <string>

namespace stylo {

enum class ClassifierKind { Fuzzy, Svm, Combined };

const char* classifier_name(ClassifierKind kind);

// Ranked classifier output. raw_scores hold whatever the classifier computed
// (similarities, decision values, weighted sums); scores are the min-max
// normalization of raw_scores to [0,1], which keeps ensemble inputs
// commensurable without changing the argmax. winner is the argmax of scores
// with lexicographically-smallest tie-break.
struct Prediction {
    std::string winner;
    std::map<std::string, double> scores;
    std::map<std::string, double> raw_scores;
    ClassifierKind source = ClassifierKind::Fuzzy;
};

Prediction make_prediction(std::map<std::string, double> raw_scores,
                           ClassifierKind source);

} // namespace stylo
