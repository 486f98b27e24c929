#include <CLI11.hpp>

#include "stylo/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"stylo - closed-set authorship attribution"};
    app.require_subcommand(1);
    app.fallthrough(); // shared flags may appear after the subcommand

    stylo::CliConfig cfg;
    app.add_option("--k", cfg.k, "fingerprint size (top-k words)");
    app.add_option("--sketch-capacity", cfg.sketch_capacity,
                   "space-saving counter capacity (default 10*k)");
    app.add_option("--svm-c", cfg.svm_c, "SVM box constraint C");
    app.add_option("--svm-gamma", cfg.svm_gamma, "RBF gamma (default 1/dims)");
    app.add_option("--svm-tol", cfg.svm_tol, "SVM KKT tolerance");
    app.add_option("--svm-max-passes", cfg.svm_max_passes, "SVM pass limit");
    app.add_option("--train-fraction", cfg.train_fraction,
                   "train share of each author's documents");
    app.add_option("--seed", cfg.seed, "seed for splits and validation carves");
    app.add_option("--folds", cfg.folds, "cross-validation folds");
    app.add_option("--threads", cfg.threads, "parallel per-document work");
    app.add_option("--classifier", cfg.classifier, "fuzzy | svm | combined");
    app.add_flag("--verbose", cfg.verbose, "print ranked scores on stderr");
    app.add_flag("--permissive", cfg.permissive,
                 "skip undecodable or empty corpus files instead of failing");

    std::string corpus_dir, model_path, text_path, out_dir = ".", csv_out;

    CLI::App* train = app.add_subcommand("train", "train a model on a corpus");
    train->add_option("corpus_dir", corpus_dir)->required();
    train->add_option("model_out", model_path)->required();

    CLI::App* predict = app.add_subcommand("predict", "attribute one text file");
    predict->add_option("model", model_path)->required();
    predict->add_option("text", text_path)->required();

    CLI::App* evaluate = app.add_subcommand("evaluate", "split, train and score");
    evaluate->add_option("corpus_dir", corpus_dir)->required();
    evaluate->add_option("--out", out_dir, "directory for report.txt/report.json");

    CLI::App* cross = app.add_subcommand("cross-validate", "stratified k-fold");
    cross->add_option("corpus_dir", corpus_dir)->required();
    cross->add_option("--out", out_dir, "directory for report.txt/report.json");

    CLI::App* bench = app.add_subcommand("bench", "single-threaded CPU-time comparison");
    bench->add_option("corpus_dir", corpus_dir)->required();
    bench->add_option("--out", out_dir, "directory for timing.txt/timing.json");

    CLI::App* export_features =
        app.add_subcommand("export-features", "write the per-document feature CSV");
    export_features->add_option("corpus_dir", corpus_dir)->required();
    export_features->add_option("csv_out", csv_out)->required();

    CLI11_PARSE(app, argc, argv);

    if (train->parsed()) return stylo::cmd_train(corpus_dir, model_path, cfg);
    if (predict->parsed()) return stylo::cmd_predict(model_path, text_path, cfg);
    if (evaluate->parsed()) return stylo::cmd_evaluate(corpus_dir, out_dir, cfg);
    if (cross->parsed()) return stylo::cmd_cross_validate(corpus_dir, out_dir, cfg);
    if (bench->parsed()) return stylo::cmd_bench(corpus_dir, out_dir, cfg);
    if (export_features->parsed()) {
        return stylo::cmd_export_features(corpus_dir, csv_out, cfg);
    }
    return 1;
}
