#include "stylo/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "stylo/error.hpp"
#include "stylo/preprocess.hpp"
#include "stylo/rng.hpp"

namespace stylo {

namespace fs = std::filesystem;

Corpus Corpus::from_documents(std::vector<Document> documents) {
    std::sort(documents.begin(), documents.end(),
              [](const Document& a, const Document& b) {
                  if (a.author_id != b.author_id) return a.author_id < b.author_id;
                  return a.doc_id < b.doc_id;
              });
    std::set<std::string> seen_ids;
    std::set<std::string> authors;
    for (const Document& d : documents) {
        if (!seen_ids.insert(d.doc_id).second) {
            fail("InvalidInput", "duplicate doc_id: " + d.doc_id);
        }
        authors.insert(d.author_id);
    }
    Corpus c;
    c.documents_ = std::move(documents);
    c.authors_.assign(authors.begin(), authors.end());
    return c;
}

namespace {

bool whitespace_only(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
        text::Decoded d = text::decode_utf8(text, i);
        if (!text::is_whitespace(d.cp)) return false;
        i += d.len;
    }
    return true;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("NotFound", "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Corpus load_corpus(const fs::path& root, bool permissive) {
    if (!fs::exists(root) || !fs::is_directory(root)) {
        fail("NotFound", "corpus directory missing: " + root.string());
    }

    std::vector<Document> documents;
    std::size_t author_dirs = 0;
    for (const fs::directory_entry& author_entry : fs::directory_iterator(root)) {
        if (!author_entry.is_directory()) continue;
        ++author_dirs;
        const std::string author_id = author_entry.path().filename().string();
        std::size_t kept = 0;
        for (const fs::directory_entry& file_entry :
             fs::directory_iterator(author_entry.path())) {
            if (!file_entry.is_regular_file()) continue;
            const fs::path& path = file_entry.path();
            std::string text = read_file(path);
            if (!text::valid_utf8(text)) {
                if (permissive) continue;
                fail("EncodingError", path.string() + " is not valid UTF-8");
            }
            if (text.empty() || whitespace_only(text)) {
                if (permissive) continue;
                fail("EmptyDocument", path.string() + " has no content");
            }
            documents.push_back(Document{author_id + "/" + path.filename().string(),
                                         author_id, std::move(text)});
            ++kept;
        }
        if (kept == 0) fail("EmptyAuthor", "no readable files for " + author_id);
    }
    if (author_dirs == 0) fail("EmptyCorpus", "no author directories in " + root.string());
    return Corpus::from_documents(std::move(documents));
}

std::pair<Corpus, Corpus> split(const Corpus& corpus, const SplitSpec& spec) {
    if (spec.train_fraction <= 0.0 || spec.train_fraction >= 1.0) {
        fail("InvalidInput", "train_fraction must lie strictly in (0,1)");
    }

    std::vector<Document> train_docs, test_docs;
    for (const std::string& author : corpus.authors()) {
        std::vector<const Document*> docs;
        for (const Document& d : corpus.documents()) {
            if (d.author_id == author) docs.push_back(&d);
        }
        if (docs.size() < 2) {
            fail("InsufficientDocuments",
                 author + " has " + std::to_string(docs.size()) + " document(s)");
        }

        // per-author stream so the partition is stable under corpus edits
        // elsewhere; at least one document lands on each side
        std::size_t n_train = static_cast<std::size_t>(std::llround(
            spec.train_fraction * static_cast<double>(docs.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, docs.size() - 1);

        Rng rng(splitmix64(spec.seed ^ fnv1a64(author)));
        std::vector<std::size_t> order(docs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        rng.shuffle(order);

        for (std::size_t i = 0; i < order.size(); ++i) {
            (i < n_train ? train_docs : test_docs).push_back(*docs[order[i]]);
        }
    }
    return {Corpus::from_documents(std::move(train_docs)),
            Corpus::from_documents(std::move(test_docs))};
}

} // namespace stylo
