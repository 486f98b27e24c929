#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace stylo {

struct Document {
    std::string doc_id;    // "author_id/filename", unique within a corpus
    std::string author_id;
    std::string text;      // raw, unmodified UTF-8
};

// Immutable author-labeled collection; documents are kept sorted by
// (author_id, doc_id) so ingestion is independent of filesystem enumeration
// order.
class Corpus {
public:
    Corpus() = default;
    static Corpus from_documents(std::vector<Document> documents);

    const std::vector<Document>& documents() const { return documents_; }
    const std::vector<std::string>& authors() const { return authors_; }
    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }

private:
    std::vector<Document> documents_;
    std::vector<std::string> authors_;
};

struct SplitSpec {
    double train_fraction = 0.7; // strictly in (0,1)
    uint64_t seed = 0;
};

// Directory tree <root>/<author_id>/<file>, UTF-8 plain text. With
// permissive=true undecodable and empty files are skipped instead of
// failing the load.
Corpus load_corpus(const std::filesystem::path& root, bool permissive = false);

// Stratified per author: round(train_fraction * n) documents to train with
// at least one document on each side. Deterministic in (corpus, spec).
std::pair<Corpus, Corpus> split(const Corpus& corpus, const SplitSpec& spec);

} // namespace stylo
