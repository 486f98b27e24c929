#include "stylo/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stylo/error.hpp"
#include "stylo/eval.hpp"

namespace stylo {

namespace fs = std::filesystem;

TrainOptions CliConfig::train_options() const {
    TrainOptions opts;
    opts.fingerprint.k = k;
    opts.fingerprint.sketch_capacity = sketch_capacity;
    opts.svm.c = svm_c;
    opts.svm.gamma = svm_gamma;
    opts.svm.tol = svm_tol;
    opts.svm.max_passes = svm_max_passes;
    opts.seed = seed;
    opts.threads = threads;
    return opts;
}

void CliConfig::validate() const {
    TrainOptions opts = train_options();
    opts.fingerprint.validate();
    opts.svm.validate();
    if (train_fraction <= 0.0 || train_fraction >= 1.0) {
        fail("InvalidInput", "train_fraction must lie strictly in (0,1)");
    }
    if (folds < 2) fail("InvalidInput", "folds must be >= 2");
    if (threads < 1) fail("InvalidInput", "threads must be >= 1");
    if (classifier != "fuzzy" && classifier != "svm" && classifier != "combined") {
        fail("InvalidInput", "classifier must be fuzzy, svm or combined");
    }
}

namespace {

int report_error(const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
}

ClassifierKind classifier_kind(const std::string& name) {
    if (name == "fuzzy") return ClassifierKind::Fuzzy;
    if (name == "svm") return ClassifierKind::Svm;
    return ClassifierKind::Combined;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("NotFound", "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("NotFound", "cannot write " + path.string());
    out << content;
    if (!out) fail("NotFound", "failed writing " + path.string());
}

} // namespace

int cmd_train(const std::string& corpus_dir, const std::string& model_out,
              const CliConfig& cfg) {
    try {
        cfg.validate();
        const Corpus corpus = load_corpus(corpus_dir, cfg.permissive);
        const CombinedModel model = train_combined(corpus, cfg.train_options());
        save_model(model, model_out);

        std::size_t sv_total = 0;
        for (const BinarySvm& m : model.svm.machines) sv_total += m.sv_indices.size();
        char line[160];
        std::snprintf(line, sizeof(line), "fuzzy: %zu author fingerprints, k=%zu\n",
                      model.fingerprints.size(), model.fingerprint_config.k);
        std::cout << line;
        std::snprintf(line, sizeof(line),
                      "svm: %zu one-vs-rest machines, %zu support vectors, gamma=%g\n",
                      model.svm.machines.size(), sv_total, model.svm.gamma);
        std::cout << line;
        std::snprintf(line, sizeof(line),
                      "combined: weights %.4f/%.4f (validation acc %.3f/%.3f)\n",
                      model.weights.w_fuzzy, model.weights.w_svm,
                      model.weights.acc_fuzzy, model.weights.acc_svm);
        std::cout << line;
        return 0;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

int cmd_predict(const std::string& model_path, const std::string& text_path,
                const CliConfig& cfg) {
    try {
        cfg.validate();
        const CombinedModel model = load_model(model_path);
        const std::string text = read_text_file(text_path);
        const ProcessedText pt = preprocess(text);

        bool has_word = false;
        for (const Token& t : pt.tokens) has_word |= t.kind == TokenKind::Word;
        if (!has_word) fail("EmptyFingerprint", text_path + " contains no words");

        const Prediction p = predict(model, pt, classifier_kind(cfg.classifier));
        std::cout << p.winner << "\n";
        if (cfg.verbose) {
            // winner only on stdout; the ranked table goes to stderr
            std::vector<std::pair<std::string, double>> ranked(p.scores.begin(),
                                                               p.scores.end());
            std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
            });
            for (const auto& [author, score] : ranked) {
                char line[160];
                std::snprintf(line, sizeof(line), "%-24s %.6f (raw %.6f)\n",
                              author.c_str(), score, p.raw_scores.at(author));
                std::cerr << line;
            }
        }
        return 0;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

int cmd_evaluate(const std::string& corpus_dir, const std::string& out_dir,
                 const CliConfig& cfg) {
    try {
        cfg.validate();
        const Corpus corpus = load_corpus(corpus_dir, cfg.permissive);
        auto [train, test] = split(corpus, SplitSpec{cfg.train_fraction, cfg.seed});
        const EvalResult result = evaluate(train, test, cfg.train_options());

        fs::create_directories(out_dir);
        write_text_file(fs::path(out_dir) / "report.txt",
                        render_report_txt(result.report));
        write_text_file(fs::path(out_dir) / "report.json",
                        report_to_json(result.report, result.timing));
        std::cout << render_report_txt(result.report);
        return 0;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

int cmd_cross_validate(const std::string& corpus_dir, const std::string& out_dir,
                       const CliConfig& cfg) {
    try {
        cfg.validate();
        const Corpus corpus = load_corpus(corpus_dir, cfg.permissive);
        const EvalReport report =
            cross_validate(corpus, cfg.folds, cfg.seed, cfg.train_options());

        fs::create_directories(out_dir);
        write_text_file(fs::path(out_dir) / "report.txt", render_report_txt(report));
        write_text_file(fs::path(out_dir) / "report.json",
                        report_to_json(report, TimingReport{}));
        std::cout << render_report_txt(report);
        return 0;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

int cmd_bench(const std::string& corpus_dir, const std::string& out_dir,
              const CliConfig& cfg) {
    try {
        cfg.validate();
        // headline CPU times are measured with parallelism disabled
        CliConfig single = cfg;
        single.threads = 1;
        const Corpus corpus = load_corpus(corpus_dir, cfg.permissive);
        auto [train, test] = split(corpus, SplitSpec{cfg.train_fraction, cfg.seed});
        const EvalResult result = evaluate(train, test, single.train_options());

        fs::create_directories(out_dir);
        write_text_file(fs::path(out_dir) / "timing.txt",
                        render_timing_txt(result.timing));
        write_text_file(fs::path(out_dir) / "timing.json",
                        report_to_json(result.report, result.timing));
        std::cout << render_timing_txt(result.timing);
        return 0;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

int cmd_export_features(const std::string& corpus_dir, const std::string& csv_out,
                        const CliConfig& cfg) {
    try {
        cfg.validate();
        const Corpus corpus = load_corpus(corpus_dir, cfg.permissive);
        const std::vector<ProcessedText> processed =
            preprocess_corpus(corpus, cfg.threads);

        std::string csv = kFeatureCsvHeader;
        csv += '\n';
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const Document& d = corpus.documents()[i];
            csv += feature_csv_row(d.doc_id, d.author_id, extract(processed[i], cfg.k));
            csv += '\n';
        }
        write_text_file(csv_out, csv);
        std::cout << "wrote " << corpus.size() << " rows to " << csv_out << "\n";
        return 0;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}

} // namespace stylo
