#include <fstream>

#include <json.hpp>

#include "stylo/error.hpp"
#include "stylo/model.hpp"

namespace stylo {

using nlohmann::json;

namespace {

json scaler_section(const CombinedModel& model) {
    return json{{"vocabulary", model.svm.layout.vocabulary},
                {"means", model.svm.scaler.means},
                {"stddevs", model.svm.scaler.stddevs}};
}

json fuzzy_section(const CombinedModel& model) {
    json fingerprints = json::object();
    for (const auto& [author, fp] : model.fingerprints) {
        json entries = json::array();
        for (const auto& [word, mu] : fp.entries) {
            entries.push_back(json::array({word, mu}));
        }
        fingerprints[author] = std::move(entries);
    }
    return json{{"k", model.fingerprint_config.k},
                {"sketch_capacity", model.fingerprint_config.effective_capacity()},
                {"fingerprints", std::move(fingerprints)}};
}

json svm_section(const CombinedModel& model) {
    json machines = json::array();
    for (std::size_t a = 0; a < model.authors.size(); ++a) {
        const BinarySvm& m = model.svm.machines[a];
        machines.push_back(json{{"author", model.authors[a]},
                                {"sv_indices", m.sv_indices},
                                {"coeffs", m.coeffs},
                                {"bias", m.bias},
                                {"converged", m.converged}});
    }
    return json{{"params",
                 json{{"c", model.svm.params.c},
                      {"gamma", model.svm.params.gamma},
                      {"tol", model.svm.params.tol},
                      {"max_passes", model.svm.params.max_passes}}},
                {"gamma", model.svm.gamma},
                {"training_matrix", model.svm.training_matrix},
                {"machines", std::move(machines)}};
}

json weights_section(const CombinedModel& model) {
    return json{{"w_fuzzy", model.weights.w_fuzzy},
                {"w_svm", model.weights.w_svm},
                {"acc_fuzzy", model.weights.acc_fuzzy},
                {"acc_svm", model.weights.acc_svm},
                {"degenerate", model.weights.degenerate}};
}

} // namespace

void save_model(const CombinedModel& model, const std::filesystem::path& path) {
    json doc{{"format_version", CombinedModel::kFormatVersion},
             {"authors", model.authors},
             {"scaler", scaler_section(model)},
             {"fuzzy", fuzzy_section(model)},
             {"svm", svm_section(model)},
             {"ensemble_weights", weights_section(model)}};

    std::ofstream out(path, std::ios::binary);
    if (!out) fail("NotFound", "cannot write " + path.string());
    out << doc.dump(2) << '\n';
    if (!out) fail("NotFound", "failed writing " + path.string());
}

CombinedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("NotFound", "cannot open " + path.string());

    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail("ParseError", path.string() + ": " + e.what());
    }

    try {
        if (!doc.contains("format_version") ||
            doc["format_version"].get<int>() != CombinedModel::kFormatVersion) {
            fail("IncompatibleModel",
                 "expected format_version " +
                     std::to_string(CombinedModel::kFormatVersion));
        }

        CombinedModel model;
        model.authors = doc.at("authors").get<std::vector<std::string>>();

        const json& fz = doc.at("fuzzy");
        model.fingerprint_config.k = fz.at("k").get<std::size_t>();
        model.fingerprint_config.sketch_capacity =
            fz.at("sketch_capacity").get<std::size_t>();
        for (const auto& [author, entries] : fz.at("fingerprints").items()) {
            FuzzyFingerprint fp;
            fp.owner = author;
            for (const json& pair : entries) {
                fp.entries[pair.at(0).get<std::string>()] = pair.at(1).get<double>();
            }
            model.fingerprints[author] = std::move(fp);
        }

        const json& sc = doc.at("scaler");
        model.svm.layout.vocabulary = sc.at("vocabulary").get<std::vector<std::string>>();
        model.svm.scaler.means = sc.at("means").get<std::vector<double>>();
        model.svm.scaler.stddevs = sc.at("stddevs").get<std::vector<double>>();

        const json& sv = doc.at("svm");
        model.svm.params.c = sv.at("params").at("c").get<double>();
        model.svm.params.gamma = sv.at("params").at("gamma").get<double>();
        model.svm.params.tol = sv.at("params").at("tol").get<double>();
        model.svm.params.max_passes = sv.at("params").at("max_passes").get<std::size_t>();
        model.svm.gamma = sv.at("gamma").get<double>();
        model.svm.training_matrix =
            sv.at("training_matrix").get<std::vector<FeatureVector>>();
        model.svm.authors = model.authors;
        for (const json& m : sv.at("machines")) {
            BinarySvm machine;
            machine.sv_indices = m.at("sv_indices").get<std::vector<uint32_t>>();
            machine.coeffs = m.at("coeffs").get<std::vector<double>>();
            machine.bias = m.at("bias").get<double>();
            machine.converged = m.at("converged").get<bool>();
            model.svm.machines.push_back(std::move(machine));
        }
        if (model.svm.machines.size() != model.authors.size()) {
            fail("ParseError", "machine count does not match author count");
        }

        const json& w = doc.at("ensemble_weights");
        model.weights.w_fuzzy = w.at("w_fuzzy").get<double>();
        model.weights.w_svm = w.at("w_svm").get<double>();
        model.weights.acc_fuzzy = w.at("acc_fuzzy").get<double>();
        model.weights.acc_svm = w.at("acc_svm").get<double>();
        model.weights.degenerate = w.at("degenerate").get<bool>();
        return model;
    } catch (const json::exception& e) {
        fail("ParseError", path.string() + ": " + e.what());
    }
}

} // namespace stylo
