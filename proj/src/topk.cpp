#include "stylo/topk.hpp"

#include <algorithm>

#include "stylo/error.hpp"

namespace stylo {

TopKSketch::TopKSketch(uint64_t capacity_m) : capacity_(capacity_m) {
    if (capacity_m == 0) fail("InvalidCapacity", "sketch capacity must be >= 1");
}

// Insert a fresh entry with the given count, keeping buckets count-ordered.
void TopKSketch::place(std::string element, uint64_t count, uint64_t error) {
    BucketIt it = buckets_.begin();
    while (it != buckets_.end() && it->count < count) ++it;
    if (it == buckets_.end() || it->count != count) {
        it = buckets_.insert(it, Bucket{count, {}});
    }
    it->entries.push_back(Entry{std::move(element), error});
    EntryIt eit = std::prev(it->entries.end());
    index_[eit->element] = Handle{it, eit};
}

// Move a monitored entry from its bucket to the count+1 bucket.
void TopKSketch::bump(Handle& h) {
    BucketIt bucket = h.bucket;
    uint64_t next_count = bucket->count + 1;
    BucketIt next = std::next(bucket);
    if (next == buckets_.end() || next->count != next_count) {
        next = buckets_.insert(next, Bucket{next_count, {}});
    }
    next->entries.splice(next->entries.end(), bucket->entries, h.entry);
    if (bucket->entries.empty()) buckets_.erase(bucket);
    h.bucket = next;
}

void TopKSketch::offer(const std::string& element) {
    if (element.empty()) fail("InvalidInput", "elements must be non-empty");
    ++stream_length_;

    auto it = index_.find(element);
    if (it != index_.end()) {
        bump(it->second);
        return;
    }
    if (index_.size() < capacity_) {
        place(element, 1, 0);
        return;
    }

    // Evict the oldest minimum-count element; the newcomer inherits its
    // count as an overestimate and records it as the error bound.
    ever_evicted_ = true;
    Bucket& min_bucket = buckets_.front();
    uint64_t min_count = min_bucket.count;
    index_.erase(min_bucket.entries.front().element);
    min_bucket.entries.pop_front();
    if (min_bucket.entries.empty()) buckets_.erase(buckets_.begin());
    place(element, min_count + 1, min_count);
}

std::vector<TopKEntry> TopKSketch::query_topk(std::size_t k) const {
    if (k == 0) fail("InvalidInput", "k must be >= 1");

    std::vector<TopKEntry> all;
    all.reserve(index_.size());
    for (auto bucket = buckets_.rbegin(); bucket != buckets_.rend(); ++bucket) {
        for (const Entry& e : bucket->entries) {
            all.push_back(TopKEntry{e.element, bucket->count, e.error, false});
        }
    }
    std::sort(all.begin(), all.end(), [](const TopKEntry& a, const TopKEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.element < b.element;
    });

    if (!ever_evicted_) {
        for (TopKEntry& e : all) e.guaranteed = true;
    } else if (all.size() > k) {
        uint64_t threshold = all[k].count;
        for (TopKEntry& e : all) e.guaranteed = e.count - e.error > threshold;
    } // fewer than k+1 counters after an eviction: nothing is guaranteed

    if (all.size() > k) all.resize(k);
    return all;
}

std::optional<std::pair<uint64_t, uint64_t>> TopKSketch::lookup(
    const std::string& element) const {
    auto it = index_.find(element);
    if (it == index_.end()) return std::nullopt;
    return std::make_pair(it->second.bucket->count, it->second.entry->error);
}

} // namespace stylo
