#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "stylo/prediction.hpp"
#include "stylo/preprocess.hpp"

namespace stylo {

struct FingerprintConfig {
    std::size_t k = 100;              // fingerprint size
    std::size_t sketch_capacity = 0;  // 0 -> 10 * k

    std::size_t effective_capacity() const {
        return sketch_capacity == 0 ? 10 * k : sketch_capacity;
    }
    void validate() const;
};

// An author profile mapping top-k words to rank-derived memberships in (0,1].
// The top-ranked word always carries membership 1.
struct FuzzyFingerprint {
    std::string owner;
    std::map<std::string, double> entries;
};

// Linear rank decay: (k - rank) / k for 0-based rank < k.
double fuzzify(std::size_t rank, std::size_t k);

FuzzyFingerprint build_author_fingerprint(const std::vector<const ProcessedText*>& docs,
                                          const FingerprintConfig& cfg,
                                          const std::string& owner);

// sum over shared words of min(mu_query, mu_author), normalized by the query
// mass. Asymmetric on purpose: a short query contained in an author's profile
// scores high.
double fingerprint_similarity(const FuzzyFingerprint& query,
                              const FuzzyFingerprint& author);

Prediction classify_fuzzy(const ProcessedText& pt,
                          const std::map<std::string, FuzzyFingerprint>& fingerprints,
                          const FingerprintConfig& cfg);

} // namespace stylo
