#pragma once

#include <cstdint>
#include <string>

#include "stylo/model.hpp"

namespace stylo {

// One flag set shared by all subcommands; validated against the owning
// modules' invariants before any work starts.
struct CliConfig {
    std::size_t k = 100;
    std::size_t sketch_capacity = 0; // 0 -> 10 * k
    double svm_c = 1.0;
    double svm_gamma = 0.0;          // 0 -> 1/dims
    double svm_tol = 1e-3;
    std::size_t svm_max_passes = 200;
    double train_fraction = 0.7;
    uint64_t seed = 42;
    std::size_t folds = 5;
    std::size_t threads = 1;
    std::string classifier = "combined"; // fuzzy | svm | combined
    bool verbose = false;
    bool permissive = false;

    TrainOptions train_options() const;
    void validate() const;
};

// Subcommand bodies; each returns the process exit status and reports
// failures as "<ErrorName>: message" on stderr.
int cmd_train(const std::string& corpus_dir, const std::string& model_out,
              const CliConfig& cfg);
int cmd_predict(const std::string& model_path, const std::string& text_path,
                const CliConfig& cfg);
int cmd_evaluate(const std::string& corpus_dir, const std::string& out_dir,
                 const CliConfig& cfg);
int cmd_cross_validate(const std::string& corpus_dir, const std::string& out_dir,
                       const CliConfig& cfg);
int cmd_bench(const std::string& corpus_dir, const std::string& out_dir,
              const CliConfig& cfg);
int cmd_export_features(const std::string& corpus_dir, const std::string& csv_out,
                        const CliConfig& cfg);

} // namespace stylo
