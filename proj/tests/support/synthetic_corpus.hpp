#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"

namespace stylo::testsupport {

// Authors draw words from a shared vocabulary through author-specific Zipf
// rank permutations, and punctuate with author-specific rates, so both the
// fingerprint route and the stylometric-vector route carry signal.
struct SyntheticSpec {
    std::size_t n_authors = 5;
    std::size_t docs_per_author = 20;
    std::size_t words_per_doc = 500;
    std::size_t vocab_size = 1000;
    double zipf_exponent = 1.1;
    uint64_t seed = 2024;
};

Corpus make_synthetic_corpus(const SyntheticSpec& spec);

// Materializes a corpus as <root>/<author_id>/<doc>.txt for CLI-level tests.
void write_corpus_dir(const Corpus& corpus, const std::filesystem::path& root);

} // namespace stylo::testsupport
