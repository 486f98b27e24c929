#include <doctest.h>

#include <cmath>

#include "stylo/error.hpp"
#include "stylo/features.hpp"
#include "stylo/rng.hpp"
#include "support/oracles.hpp"

using namespace stylo;

TEST_CASE("extract counts the hello-world example") {
    StyleFeatures sf = extract(preprocess("Hello, world."), 10);
    CHECK(sf.commas == 1);
    CHECK(sf.periods == 1);
    CHECK(sf.word_count == 2);
    CHECK(sf.sentence_count == 1);
    CHECK(sf.char_count == 12);
    CHECK(sf.blanks == 1);
    CHECK(sf.chars_per_sentence == doctest::Approx(12.0));
    REQUIRE(sf.topk_words.size() == 2);
    CHECK(sf.topk_words[0].first == "hello");
    CHECK(sf.topk_words[1].first == "world");
}

TEST_CASE("extract of empty text is all zeros") {
    StyleFeatures sf = extract(preprocess(""), 10);
    CHECK(sf.word_count == 0);
    CHECK(sf.char_count == 0);
    CHECK(sf.sentence_count == 0);
    CHECK(sf.chars_per_sentence == 0.0);
    CHECK(sf.topk_words.empty());
}

TEST_CASE("chars-per-sentence over multiple sentences") {
    StyleFeatures sf = extract(preprocess("a. b. c."), 10);
    CHECK(sf.sentence_count == 3);
    CHECK(sf.char_count == 6);
    CHECK(sf.chars_per_sentence == doctest::Approx(2.0));
}

TEST_CASE("punctuation classes cover the typographic variants") {
    StyleFeatures sf = extract(
        preprocess("x – y — z - (a) [b] {c} \"d\" `e` ’ “ ” / \\ _ ; :"),
        10);
    CHECK(sf.dashes == 3);
    CHECK(sf.brackets == 6);
    CHECK(sf.quotations == 7);
    CHECK(sf.slashes == 2);
    CHECK(sf.underscores == 1);
    CHECK(sf.semicolons == 1);
    CHECK(sf.colons == 1);
}

TEST_CASE("document-local top-k is exact with lexicographic ties") {
    StyleFeatures sf = extract(preprocess("b b a a c"), 2);
    REQUIRE(sf.topk_words.size() == 2);
    CHECK(sf.topk_words[0] == std::pair<std::string, uint64_t>{"a", 2});
    CHECK(sf.topk_words[1] == std::pair<std::string, uint64_t>{"b", 2});
}

TEST_CASE("layout sorts and deduplicates the vocabulary") {
    FeatureLayout layout = build_layout({"b", "a"});
    CHECK(layout.vocabulary == std::vector<std::string>{"a", "b"});
    CHECK(layout.dims() == 18);
    CHECK_THROWS_AS(build_layout({}), Error);
}

TEST_CASE("vectorize normalizes punctuation by chars and words by word count") {
    FeatureLayout layout = build_layout({"world", "zebra"});
    StyleFeatures sf = extract(preprocess("Hello, world."), 10);
    FeatureVector v = vectorize(sf, layout);
    REQUIRE(v.size() == 18);
    CHECK(v[1] == doctest::Approx(1.0 / 12.0)); // comma slot
    CHECK(v[12] == 2.0);
    CHECK(v[15] == doctest::Approx(12.0));
    CHECK(v[16] == doctest::Approx(0.5)); // "world" relative frequency
    CHECK(v[17] == 0.0);                  // absent word is exactly zero
}

TEST_CASE("scaler matches the two-point z-score example") {
    Scaler s = fit_scaler({{0.0}, {2.0}});
    CHECK(apply_scaler(s, {0.0})[0] == doctest::Approx(-1.0));
    CHECK(apply_scaler(s, {2.0})[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(fit_scaler({{1.0}}), Error);
    CHECK_THROWS_AS(apply_scaler(s, {1.0, 2.0}), Error);
}

TEST_CASE("constant dimensions scale to zero") {
    Scaler s = fit_scaler({{5.0, 1.0}, {5.0, 3.0}});
    FeatureVector v = apply_scaler(s, {5.0, 2.0});
    CHECK(v[0] == 0.0);
    CHECK(std::isfinite(v[1]));
}

TEST_CASE("fit-then-apply yields zero mean and unit variance") {
    Rng rng(99);
    std::vector<FeatureVector> train;
    for (int i = 0; i < 40; ++i) {
        FeatureVector v(6);
        for (double& x : v) x = rng.next_double() * 10.0 - 5.0;
        v[3] = 7.0; // constant dim
        train.push_back(v);
    }
    Scaler s = fit_scaler(train);
    std::vector<double> mean(6, 0.0), var(6, 0.0);
    for (const auto& v : train) {
        FeatureVector z = apply_scaler(s, v);
        for (int d = 0; d < 6; ++d) mean[d] += z[d];
    }
    for (double& m : mean) m /= train.size();
    for (const auto& v : train) {
        FeatureVector z = apply_scaler(s, v);
        for (int d = 0; d < 6; ++d) var[d] += (z[d] - mean[d]) * (z[d] - mean[d]);
    }
    for (int d = 0; d < 6; ++d) {
        CHECK(std::abs(mean[d]) < 1e-9);
        if (d != 3) CHECK(std::abs(var[d] / train.size() - 1.0) < 1e-9);
    }
}

TEST_CASE("extract agrees with the independent raw-text scanner") {
    Rng rng(31415);
    for (int i = 0; i < 200; ++i) {
        const std::string text = testsupport::random_text(rng, 1 + rng.next_index(80));
        const testsupport::ScannedFeatures expected = testsupport::scan_features(text);
        const StyleFeatures got = extract(preprocess(text), 5);
        CAPTURE(text);
        CHECK(got.periods == expected.periods);
        CHECK(got.commas == expected.commas);
        CHECK(got.question_marks == expected.questions);
        CHECK(got.colons == expected.colons);
        CHECK(got.semicolons == expected.semicolons);
        CHECK(got.blanks == expected.blanks);
        CHECK(got.exclamations == expected.exclamations);
        CHECK(got.dashes == expected.dashes);
        CHECK(got.underscores == expected.underscores);
        CHECK(got.brackets == expected.brackets);
        CHECK(got.quotations == expected.quotations);
        CHECK(got.slashes == expected.slashes);
        CHECK(got.word_count == expected.words);
        CHECK(got.sentence_count == expected.sentences);
        CHECK(got.char_count == expected.chars);
        CHECK(got.chars_per_sentence == doctest::Approx(expected.chars_per_sentence));
    }
}

TEST_CASE("csv header and row format") {
    CHECK(std::string(kFeatureCsvHeader) ==
          "doc_id,author_id,periods,commas,questions,colons,semicolons,blanks,"
          "exclamations,dashes,underscores,brackets,quotations,slashes,words,"
          "sentences,chars,chars_per_sentence");
    StyleFeatures sf = extract(preprocess("Hello, world."), 10);
    CHECK(feature_csv_row("a/d1.txt", "a", sf) ==
          "a/d1.txt,a,1,1,0,0,0,1,0,0,0,0,0,0,2,1,12,12");
}
