#include <doctest.h>

#include <json.hpp>

#include "stylo/error.hpp"
#include "stylo/eval.hpp"
#include "support/synthetic_corpus.hpp"

using namespace stylo;

namespace {

testsupport::SyntheticSpec small_spec() {
    testsupport::SyntheticSpec spec;
    spec.n_authors = 3;
    spec.docs_per_author = 6;
    spec.words_per_doc = 120;
    spec.vocab_size = 250;
    spec.seed = 55;
    return spec;
}

TrainOptions small_options() {
    TrainOptions opts;
    opts.fingerprint.k = 40;
    opts.seed = 11;
    return opts;
}

uint64_t confusion_total(const ClassifierEval& ce) {
    uint64_t total = 0;
    for (const auto& row : ce.confusion) {
        for (uint64_t v : row) total += v;
    }
    return total;
}

} // namespace

TEST_CASE("resubstitution on a separable corpus is near perfect") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    EvalResult result = evaluate(corpus, corpus, small_options());
    for (const auto& [name, ce] : result.report.per_classifier) {
        CAPTURE(name);
        CHECK(ce.accuracy >= 0.95);
        CHECK(confusion_total(ce) == result.report.n_test);
    }
    CHECK(result.report.n_test == corpus.size());
}

TEST_CASE("accuracy equals trace over n_test and recalls match rows") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    auto [train, test] = split(corpus, SplitSpec{0.7, 2});
    EvalResult result = evaluate(train, test, small_options());

    for (const auto& [name, ce] : result.report.per_classifier) {
        uint64_t trace = 0;
        for (std::size_t i = 0; i < ce.confusion.size(); ++i) trace += ce.confusion[i][i];
        CHECK(ce.accuracy ==
              static_cast<double>(trace) / static_cast<double>(result.report.n_test));
        for (std::size_t t = 0; t < result.report.authors.size(); ++t) {
            uint64_t row = 0;
            for (uint64_t v : ce.confusion[t]) row += v;
            const double recall = ce.per_author_recall.at(result.report.authors[t]);
            if (row > 0) {
                CHECK(recall ==
                      static_cast<double>(ce.confusion[t][t]) / static_cast<double>(row));
            }
        }
    }
}

TEST_CASE("test authors missing from train are rejected") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    std::vector<Document> train_docs, test_docs;
    for (const Document& d : corpus.documents()) {
        if (d.author_id == "author_c") {
            test_docs.push_back(d);
        } else {
            train_docs.push_back(d);
        }
    }
    CHECK_THROWS_WITH_AS(evaluate(Corpus::from_documents(train_docs),
                                  Corpus::from_documents(test_docs), small_options()),
                         doctest::Contains("UnknownAuthor"), Error);
}

TEST_CASE("structured reports are byte-identical apart from timing") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    auto [train, test] = split(corpus, SplitSpec{0.7, 2});
    EvalResult r1 = evaluate(train, test, small_options());
    EvalResult r2 = evaluate(train, test, small_options());

    nlohmann::json j1 = nlohmann::json::parse(report_to_json(r1.report, r1.timing));
    nlohmann::json j2 = nlohmann::json::parse(report_to_json(r2.report, r2.timing));
    j1.erase("timing");
    j2.erase("timing");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("timing report rows are present and non-negative") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    auto [train, test] = split(corpus, SplitSpec{0.7, 2});
    EvalResult result = evaluate(train, test, small_options());
    REQUIRE(result.timing.per_classifier.size() == 3);
    for (const auto& [name, t] : result.timing.per_classifier) {
        CHECK(t.train_cpu_seconds >= 0.0);
        CHECK(t.predict_cpu_seconds_total >= 0.0);
        CHECK(t.predict_per_doc_mean >= 0.0);
    }
}

TEST_CASE("cross validation pools every document exactly once") {
    testsupport::SyntheticSpec spec = small_spec();
    spec.docs_per_author = 4;
    Corpus corpus = testsupport::make_synthetic_corpus(spec);
    EvalReport report = cross_validate(corpus, 4, 77, small_options());
    CHECK(report.n_test == corpus.size());
    for (const auto& [name, ce] : report.per_classifier) {
        CHECK(confusion_total(ce) == corpus.size());
    }

    EvalReport again = cross_validate(corpus, 4, 77, small_options());
    CHECK(report_to_json(report, TimingReport{}) ==
          report_to_json(again, TimingReport{}));

    CHECK_THROWS_WITH_AS(cross_validate(corpus, 5, 77, small_options()),
                         doctest::Contains("InsufficientDocuments"), Error);
    CHECK_THROWS_AS(cross_validate(corpus, 1, 77, small_options()), Error);
}

TEST_CASE("a single correctly classified test document fills one diagonal cell") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    Corpus one = Corpus::from_documents({corpus.documents()[0]});
    EvalResult result = evaluate(corpus, one, small_options());
    for (const auto& [name, ce] : result.report.per_classifier) {
        CAPTURE(name);
        CHECK(ce.accuracy == 1.0);
        CHECK(confusion_total(ce) == 1);
        CHECK(ce.confusion[0][0] == 1);
    }
}

TEST_CASE("the ten-author twenty-text protocol yields a 10x10 report") {
    testsupport::SyntheticSpec spec;
    spec.n_authors = 10;
    spec.docs_per_author = 20;
    spec.words_per_doc = 150;
    spec.vocab_size = 400;
    spec.seed = 12;
    Corpus corpus = testsupport::make_synthetic_corpus(spec);
    CHECK(corpus.size() == 200);

    TrainOptions opts = small_options();
    auto [train, test] = split(corpus, SplitSpec{0.7, 4});
    EvalResult result = evaluate(train, test, opts);
    CHECK(result.report.authors.size() == 10);
    CHECK(result.report.n_test == 60); // 6 held-out texts per author
    for (const auto& [name, ce] : result.report.per_classifier) {
        CHECK(ce.confusion.size() == 10);
        CHECK(ce.confusion[0].size() == 10);
    }
}

TEST_CASE("leave-one-out per author pools one prediction per document") {
    testsupport::SyntheticSpec spec;
    spec.n_authors = 5;
    spec.docs_per_author = 20;
    spec.words_per_doc = 80;
    spec.vocab_size = 200;
    spec.seed = 21;
    Corpus corpus = testsupport::make_synthetic_corpus(spec);

    TrainOptions opts;
    opts.fingerprint.k = 30;
    opts.seed = 5;
    EvalReport report = cross_validate(corpus, 20, 3, opts);
    CHECK(report.n_test == 100);
    for (const auto& [name, ce] : report.per_classifier) {
        CHECK(confusion_total(ce) == 100);
    }
}

TEST_CASE("thread count does not change evaluation results") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    auto [train, test] = split(corpus, SplitSpec{0.7, 2});
    TrainOptions serial = small_options();
    TrainOptions parallel = small_options();
    parallel.threads = 4;
    EvalResult r1 = evaluate(train, test, serial);
    EvalResult r2 = evaluate(train, test, parallel);

    nlohmann::json j1 = nlohmann::json::parse(report_to_json(r1.report, r1.timing));
    nlohmann::json j2 = nlohmann::json::parse(report_to_json(r2.report, r2.timing));
    j1.erase("timing");
    j2.erase("timing");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("layout vocabulary is the union of fingerprint supports") {
    std::map<std::string, FuzzyFingerprint> fps;
    fps["a"] = FuzzyFingerprint{"a", {{"alpha", 1.0}, {"beta", 0.5}}};
    fps["b"] = FuzzyFingerprint{"b", {{"beta", 1.0}, {"gamma", 0.5}}};
    FeatureLayout layout = layout_from_fingerprints(fps);
    CHECK(layout.vocabulary == std::vector<std::string>{"alpha", "beta", "gamma"});
    CHECK(layout.dims() == 16 + 3);
}

TEST_CASE("text report has one row per classifier and an ordering line") {
    Corpus corpus = testsupport::make_synthetic_corpus(small_spec());
    auto [train, test] = split(corpus, SplitSpec{0.7, 2});
    EvalResult result = evaluate(train, test, small_options());
    const std::string txt = render_report_txt(result.report);
    CHECK(txt.find("fuzzy") != std::string::npos);
    CHECK(txt.find("svm") != std::string::npos);
    CHECK(txt.find("combined") != std::string::npos);
    CHECK(txt.find("ordering") != std::string::npos);

    const std::string timing = render_timing_txt(result.timing);
    CHECK(timing.find("train_cpu_s") != std::string::npos);
}
