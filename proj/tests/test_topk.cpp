#include <doctest.h>

#include "stylo/error.hpp"
#include "stylo/rng.hpp"
#include "stylo/topk.hpp"
#include "support/oracles.hpp"

using namespace stylo;

TEST_CASE("sketch construction validates capacity") {
    CHECK_THROWS_AS(TopKSketch(0), Error);
    TopKSketch sketch(10);
    CHECK(sketch.monitored() == 0);
    CHECK(sketch.capacity() == 10);
}

TEST_CASE("no eviction below capacity") {
    TopKSketch sketch(2);
    for (const char* e : {"a", "a", "b"}) sketch.offer(e);
    CHECK(sketch.monitored() == 2);
    CHECK(!sketch.ever_evicted());
    CHECK(sketch.lookup("a") == std::pair<uint64_t, uint64_t>{2, 0});
    CHECK(sketch.lookup("b") == std::pair<uint64_t, uint64_t>{1, 0});
}

TEST_CASE("eviction replaces the minimum and inherits its count") {
    TopKSketch sketch(2);
    for (const char* e : {"a", "a", "b", "c"}) sketch.offer(e);
    CHECK(sketch.monitored() == 2);
    CHECK(sketch.ever_evicted());
    CHECK(!sketch.lookup("b").has_value());
    CHECK(sketch.lookup("a") == std::pair<uint64_t, uint64_t>{2, 0});
    CHECK(sketch.lookup("c") == std::pair<uint64_t, uint64_t>{2, 1});
}

TEST_CASE("capacity one tracks a single overestimated counter") {
    TopKSketch sketch(1);
    for (const char* e : {"a", "b", "a"}) sketch.offer(e);
    CHECK(sketch.monitored() == 1);
    // a was evicted by b (count 2), then re-entered at count 3 inheriting
    // b's count as its error
    auto entry = sketch.lookup("a");
    REQUIRE(entry.has_value());
    CHECK(entry->first == 3);
    CHECK(entry->second == 2);
    CHECK(entry->first - entry->second <= 2); // true count of a is 2
    CHECK(entry->second < entry->first);
}

TEST_CASE("query sorts by count then element and truncates") {
    TopKSketch sketch(10);
    for (const char* e : {"b", "d", "a", "a", "c"}) sketch.offer(e);
    auto top = sketch.query_topk(2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].element == "a");
    CHECK(top[0].count == 2);
    CHECK(top[1].element == "b"); // ties break lexicographically
    CHECK(sketch.query_topk(5).size() == 4);

    for (const auto& e : sketch.query_topk(4)) {
        CHECK(e.guaranteed); // never evicted
        CHECK(e.error == 0);
    }
}

TEST_CASE("guaranteed flag uses the k+1-th counter after evictions") {
    TopKSketch sketch(3);
    for (const char* e : {"a", "a", "a", "a", "b", "b", "c", "d"}) sketch.offer(e);
    // c evicted by d: d has count 2, error 1
    auto top = sketch.query_topk(2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].element == "a");
    // third counter (d: count 2) is the threshold: a has 4 - 0 > 2
    CHECK(top[0].guaranteed);
    CHECK(top[1].element == "b");
    CHECK(!top[1].guaranteed); // 2 - 0 is not strictly above 2

    // fewer than k+1 counters and an eviction happened: nothing guaranteed
    for (const auto& e : sketch.query_topk(3)) CHECK(!e.guaranteed);
}

TEST_CASE("empty element is rejected") {
    TopKSketch sketch(2);
    CHECK_THROWS_AS(sketch.offer(""), Error);
}

TEST_CASE("randomized streams satisfy the space-saving bounds") {
    Rng rng(20240501);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t alphabet = 1 + rng.next_index(50);
        const std::size_t length = 1 + rng.next_index(2000);
        const uint64_t m = 1 + rng.next_index(50);

        std::vector<std::string> stream;
        stream.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            stream.push_back("e" + std::to_string(rng.next_index(alphabet)));
        }

        TopKSketch sketch(m);
        for (const std::string& e : stream) sketch.offer(e);
        const auto exact = testsupport::exact_counts(stream);

        const auto monitored = sketch.query_topk(sketch.monitored());
        uint64_t mass = 0;
        for (const auto& e : monitored) {
            mass += e.count;
            const uint64_t truth = exact.at(e.element);
            CHECK(truth <= e.count);
            CHECK(e.count - e.error <= truth);
            CHECK(e.error < e.count);
        }
        CHECK(mass == length);

        if (m >= exact.size()) {
            CHECK(!sketch.ever_evicted());
            for (const auto& e : monitored) {
                CHECK(e.error == 0);
                CHECK(e.count == exact.at(e.element));
            }
        }

        // classic frequent-elements guarantee
        for (const auto& [element, count] : exact) {
            if (count > length / m) {
                CHECK(sketch.lookup(element).has_value());
            }
        }
    }
}

TEST_CASE("exact regime matches brute-force ordering") {
    Rng rng(7);
    std::vector<std::string> stream;
    for (int i = 0; i < 500; ++i) {
        stream.push_back("w" + std::to_string(rng.next_index(20)));
    }
    TopKSketch sketch(64);
    for (const auto& e : stream) sketch.offer(e);

    auto exact = testsupport::exact_counts(stream);
    std::vector<std::pair<std::string, uint64_t>> sorted(exact.begin(), exact.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    auto top = sketch.query_topk(10);
    REQUIRE(top.size() == 10);
    for (std::size_t i = 0; i < top.size(); ++i) {
        CHECK(top[i].element == sorted[i].first);
        CHECK(top[i].count == sorted[i].second);
    }
}
