#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stylo {

struct TopKEntry {
    std::string element;
    uint64_t count = 0;
    uint64_t error = 0;
    bool guaranteed = false;
};

// Counter-based Space-Saving sketch over a Stream-Summary: buckets are kept
// in ascending count order and entries within a bucket age front to back, so
// the eviction victim (oldest minimum-count element) is front-of-front and
// increments move entries between adjacent buckets without scanning.
//
// For every monitored element e: exact(e) <= count(e) <= exact(e) + error(e),
// error(e) < count(e), and the counts of all monitored elements sum to the
// stream length.
class TopKSketch {
public:
    explicit TopKSketch(uint64_t capacity_m); // capacity 0 -> InvalidCapacity

    void offer(const std::string& element);

    // min(k, monitored) entries sorted by count descending, ties broken
    // lexicographically by element. guaranteed: count - error strictly
    // exceeds the (k+1)-th counter's count; always true when the sketch
    // never evicted, always false when it evicted and fewer than k+1
    // counters exist.
    std::vector<TopKEntry> query_topk(std::size_t k) const;

    std::size_t monitored() const { return index_.size(); }
    uint64_t capacity() const { return capacity_; }
    uint64_t stream_length() const { return stream_length_; }
    bool ever_evicted() const { return ever_evicted_; }

    // (count, error) of a monitored element; nullopt when unmonitored
    std::optional<std::pair<uint64_t, uint64_t>> lookup(const std::string& element) const;

private:
    struct Entry {
        std::string element;
        uint64_t error;
    };
    struct Bucket {
        uint64_t count;
        std::list<Entry> entries; // oldest at front
    };
    using BucketIt = std::list<Bucket>::iterator;
    using EntryIt = std::list<Entry>::iterator;
    struct Handle {
        BucketIt bucket;
        EntryIt entry;
    };

    void place(std::string element, uint64_t count, uint64_t error);
    void bump(Handle& h);

    std::list<Bucket> buckets_; // ascending count order
    std::unordered_map<std::string, Handle> index_;
    uint64_t capacity_;
    uint64_t stream_length_ = 0;
    bool ever_evicted_ = false;
};

} // namespace stylo
