#include "stylo/eval.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "stylo/cpu_time.hpp"
#include "stylo/error.hpp"
#include "stylo/parallel.hpp"
#include "stylo/rng.hpp"

namespace stylo {

using nlohmann::json;

namespace {

std::size_t author_index(const std::vector<std::string>& authors,
                         const std::string& author) {
    auto it = std::lower_bound(authors.begin(), authors.end(), author);
    if (it == authors.end() || *it != author) {
        fail("UnknownAuthor", author + " missing from the trained author set");
    }
    return static_cast<std::size_t>(it - authors.begin());
}

ClassifierEval eval_from_confusion(std::vector<std::vector<uint64_t>> confusion,
                                   const std::vector<std::string>& authors) {
    ClassifierEval ce;
    uint64_t total = 0, correct = 0;
    for (std::size_t t = 0; t < authors.size(); ++t) {
        uint64_t row = 0;
        for (std::size_t p = 0; p < authors.size(); ++p) {
            total += confusion[t][p];
            row += confusion[t][p];
        }
        correct += confusion[t][t];
        ce.per_author_recall[authors[t]] =
            row == 0 ? 0.0
                     : static_cast<double>(confusion[t][t]) / static_cast<double>(row);
    }
    ce.confusion = std::move(confusion);
    ce.accuracy = total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
    return ce;
}

bool ordering_holds(const EvalReport& r) {
    const double tol = r.ordering_tolerance_pp / 100.0;
    const double fuzzy = r.per_classifier.at("fuzzy").accuracy;
    const double svm = r.per_classifier.at("svm").accuracy;
    const double combined = r.per_classifier.at("combined").accuracy;
    return combined >= svm - tol && svm >= fuzzy - tol;
}

struct PredictionRow {
    Prediction fuzzy, svm, combined;
};

} // namespace

EvalResult evaluate(const Corpus& train, const Corpus& test, const TrainOptions& opts) {
    for (const std::string& author : test.authors()) {
        if (!std::binary_search(train.authors().begin(), train.authors().end(), author)) {
            fail("UnknownAuthor", author + " appears in test but not in train");
        }
    }

    EvalResult result;
    TrainTimings train_times;
    result.model = train_combined(train, opts, &train_times);

    const std::vector<std::string>& authors = result.model.authors;
    const std::vector<ProcessedText> processed = preprocess_corpus(test, opts.threads);

    std::vector<PredictionRow> rows(test.size());
    double fuzzy_predict = 0.0, svm_predict = 0.0, combined_predict = 0.0;
    if (opts.threads <= 1) {
        // timed per classifier; the combined pass re-runs both members so
        // its cost is what a combined-only run would pay
        double t0 = cpu_seconds();
        for (std::size_t i = 0; i < test.size(); ++i) {
            rows[i].fuzzy = predict_fuzzy(result.model, processed[i]);
        }
        double t1 = cpu_seconds();
        for (std::size_t i = 0; i < test.size(); ++i) {
            rows[i].svm = predict_svm(result.model, processed[i]);
        }
        double t2 = cpu_seconds();
        for (std::size_t i = 0; i < test.size(); ++i) {
            rows[i].combined = predict_combined(result.model, processed[i]);
        }
        double t3 = cpu_seconds();
        fuzzy_predict = t1 - t0;
        svm_predict = t2 - t1;
        combined_predict = t3 - t2;
    } else {
        parallel_for(test.size(), opts.threads, [&](std::size_t i) {
            rows[i].fuzzy = predict_fuzzy(result.model, processed[i]);
            rows[i].svm = predict_svm(result.model, processed[i]);
            rows[i].combined = predict_combined(result.model, processed[i]);
        });
    }

    const std::size_t n_authors = authors.size();
    std::map<std::string, std::vector<std::vector<uint64_t>>> confusion;
    for (const char* c : {"fuzzy", "svm", "combined"}) {
        confusion[c].assign(n_authors, std::vector<uint64_t>(n_authors, 0));
    }
    for (std::size_t i = 0; i < test.size(); ++i) {
        const std::size_t truth = author_index(authors, test.documents()[i].author_id);
        ++confusion["fuzzy"][truth][author_index(authors, rows[i].fuzzy.winner)];
        ++confusion["svm"][truth][author_index(authors, rows[i].svm.winner)];
        ++confusion["combined"][truth][author_index(authors, rows[i].combined.winner)];
    }

    result.report.authors = authors;
    result.report.n_test = test.size();
    result.report.config = opts;
    for (auto& [name, matrix] : confusion) {
        result.report.per_classifier[name] =
            eval_from_confusion(std::move(matrix), authors);
    }
    result.report.ordering_holds = ordering_holds(result.report);

    const double n = static_cast<double>(std::max<std::size_t>(test.size(), 1));
    result.timing.per_classifier["fuzzy"] =
        ClassifierTiming{train_times.fuzzy, fuzzy_predict, fuzzy_predict / n};
    result.timing.per_classifier["svm"] =
        ClassifierTiming{train_times.svm, svm_predict, svm_predict / n};
    result.timing.per_classifier["combined"] =
        ClassifierTiming{train_times.combined, combined_predict, combined_predict / n};
    return result;
}

EvalReport cross_validate(const Corpus& corpus, std::size_t folds, uint64_t seed,
                          const TrainOptions& opts) {
    if (folds < 2) fail("InvalidInput", "need >= 2 folds");

    // fold assignment: seeded per-author shuffle, then round-robin
    std::map<std::string, std::size_t> fold_of;
    for (const std::string& author : corpus.authors()) {
        std::vector<std::string> doc_ids;
        for (const Document& d : corpus.documents()) {
            if (d.author_id == author) doc_ids.push_back(d.doc_id);
        }
        if (doc_ids.size() < folds) {
            fail("InsufficientDocuments",
                 author + " has " + std::to_string(doc_ids.size()) + " document(s), " +
                     std::to_string(folds) + " folds requested");
        }
        Rng rng(splitmix64(seed ^ fnv1a64(author)));
        rng.shuffle(doc_ids);
        for (std::size_t i = 0; i < doc_ids.size(); ++i) {
            fold_of[doc_ids[i]] = i % folds;
        }
    }

    const std::vector<std::string>& authors = corpus.authors();
    std::map<std::string, std::vector<std::vector<uint64_t>>> pooled;
    for (const char* c : {"fuzzy", "svm", "combined"}) {
        pooled[c].assign(authors.size(), std::vector<uint64_t>(authors.size(), 0));
    }

    for (std::size_t fold = 0; fold < folds; ++fold) {
        std::vector<Document> train_docs, test_docs;
        for (const Document& d : corpus.documents()) {
            (fold_of[d.doc_id] == fold ? test_docs : train_docs).push_back(d);
        }
        EvalResult fold_result = evaluate(Corpus::from_documents(std::move(train_docs)),
                                          Corpus::from_documents(std::move(test_docs)),
                                          opts);
        for (auto& [name, matrix] : pooled) {
            const auto& fold_matrix = fold_result.report.per_classifier.at(name).confusion;
            for (std::size_t t = 0; t < authors.size(); ++t) {
                for (std::size_t p = 0; p < authors.size(); ++p) {
                    matrix[t][p] += fold_matrix[t][p];
                }
            }
        }
    }

    EvalReport report;
    report.authors = authors;
    report.n_test = corpus.size();
    report.config = opts;
    for (auto& [name, matrix] : pooled) {
        report.per_classifier[name] = eval_from_confusion(std::move(matrix), authors);
    }
    report.ordering_holds = ordering_holds(report);
    return report;
}

std::string render_report_txt(const EvalReport& report) {
    char line[128];
    std::string out = "classifier    accuracy_pct\n";
    for (const char* name : {"fuzzy", "svm", "combined"}) {
        std::snprintf(line, sizeof(line), "%-12s  %12.1f\n", name,
                      report.per_classifier.at(name).accuracy * 100.0);
        out += line;
    }
    std::snprintf(line, sizeof(line),
                  "ordering combined >= svm >= fuzzy (tol %.1f pp): %s\n",
                  report.ordering_tolerance_pp, report.ordering_holds ? "yes" : "no");
    out += line;
    return out;
}

std::string render_timing_txt(const TimingReport& timing) {
    char line[160];
    std::string out =
        "classifier    train_cpu_s   predict_cpu_s   predict_per_doc_s\n";
    for (const char* name : {"fuzzy", "svm", "combined"}) {
        const ClassifierTiming& t = timing.per_classifier.at(name);
        std::snprintf(line, sizeof(line), "%-12s  %11.6f   %13.6f   %17.9f\n", name,
                      t.train_cpu_seconds, t.predict_cpu_seconds_total,
                      t.predict_per_doc_mean);
        out += line;
    }
    return out;
}

namespace {

json config_to_json(const TrainOptions& opts) {
    return json{{"k", opts.fingerprint.k},
                {"sketch_capacity", opts.fingerprint.effective_capacity()},
                {"svm_c", opts.svm.c},
                {"svm_gamma", opts.svm.gamma},
                {"svm_tol", opts.svm.tol},
                {"svm_max_passes", opts.svm.max_passes},
                {"validation_fraction", opts.validation_fraction},
                {"seed", opts.seed}};
}

} // namespace

std::string report_to_json(const EvalReport& report, const TimingReport& timing) {
    json per_classifier = json::object();
    for (const auto& [name, ce] : report.per_classifier) {
        per_classifier[name] = json{{"accuracy", ce.accuracy},
                                    {"confusion", ce.confusion},
                                    {"per_author_recall", ce.per_author_recall}};
    }
    json timing_json = json::object();
    for (const auto& [name, t] : timing.per_classifier) {
        timing_json[name] = json{{"train_cpu_seconds", t.train_cpu_seconds},
                                 {"predict_cpu_seconds_total", t.predict_cpu_seconds_total},
                                 {"predict_per_doc_mean", t.predict_per_doc_mean}};
    }
    json doc{{"authors", report.authors},
             {"config", config_to_json(report.config)},
             {"n_test", report.n_test},
             {"ordering",
              json{{"rule", "combined >= svm >= fuzzy"},
                   {"tolerance_pp", report.ordering_tolerance_pp},
                   {"holds", report.ordering_holds}}},
             {"per_classifier", std::move(per_classifier)},
             {"timing", std::move(timing_json)}};
    return doc.dump(2) + "\n";
}

} // namespace stylo
