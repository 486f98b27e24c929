#include "stylo/fuzzy.hpp"

#include "stylo/error.hpp"
#include "stylo/topk.hpp"

namespace stylo {

void FingerprintConfig::validate() const {
    if (k == 0) fail("InvalidCapacity", "fingerprint size k must be >= 1");
    if (effective_capacity() < k) {
        fail("InvalidCapacity", "sketch capacity must be >= k");
    }
}

double fuzzify(std::size_t rank, std::size_t k) {
    if (rank >= k) fail("OutOfRange", "rank must be < k");
    return static_cast<double>(k - rank) / static_cast<double>(k);
}

FuzzyFingerprint build_author_fingerprint(const std::vector<const ProcessedText*>& docs,
                                          const FingerprintConfig& cfg,
                                          const std::string& owner) {
    cfg.validate();
    TopKSketch sketch(cfg.effective_capacity());
    for (const ProcessedText* pt : docs) {
        for (const Token& t : pt->tokens) {
            if (t.kind == TokenKind::Word) sketch.offer(t.normalized);
        }
    }
    if (sketch.stream_length() == 0) {
        fail("EmptyFingerprint", "no word tokens for '" + owner + "'");
    }

    FuzzyFingerprint fp;
    fp.owner = owner;
    std::vector<TopKEntry> top = sketch.query_topk(cfg.k);
    for (std::size_t rank = 0; rank < top.size(); ++rank) {
        fp.entries[top[rank].element] = fuzzify(rank, cfg.k);
    }
    return fp;
}

double fingerprint_similarity(const FuzzyFingerprint& query,
                              const FuzzyFingerprint& author) {
    if (query.entries.empty()) fail("EmptyFingerprint", "query fingerprint is empty");

    double shared = 0.0;
    double mass = 0.0;
    for (const auto& [word, mu] : query.entries) {
        mass += mu;
        auto it = author.entries.find(word);
        if (it != author.entries.end()) shared += std::min(mu, it->second);
    }
    return shared / mass;
}

Prediction classify_fuzzy(const ProcessedText& pt,
                          const std::map<std::string, FuzzyFingerprint>& fingerprints,
                          const FingerprintConfig& cfg) {
    if (fingerprints.empty()) fail("InvalidInput", "no author fingerprints");

    FuzzyFingerprint query = build_author_fingerprint({&pt}, cfg, "query");
    std::map<std::string, double> scores;
    for (const auto& [author, fp] : fingerprints) {
        scores[author] = fingerprint_similarity(query, fp);
    }
    return make_prediction(std::move(scores), ClassifierKind::Fuzzy);
}

} // namespace stylo
