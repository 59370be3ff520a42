#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace p2h {

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class BranchPreference { center, lower_bound };

const char* preference_name(BranchPreference p);
BranchPreference parse_preference(const std::string& name);

struct Neighbor {
    std::uint32_t id = 0;
    double distance = 0.0;
};

struct SearchCounters {
    std::uint64_t center_ip_count = 0;      // full d-dim inner products with node centers
    std::uint64_t candidates_verified = 0;  // full d-dim inner products with data points
    std::uint64_t nodes_visited = 0;
    std::uint64_t leaves_scanned = 0;
};

struct SearchOptions {
    std::uint32_t k = 1;
    std::uint64_t budget = kUnlimitedBudget;  // max candidate verifications
    BranchPreference preference = BranchPreference::center;
    // Point-level bound toggles, honored by the BC tree only.
    bool use_point_ball = true;
    bool use_point_cone = true;
};

struct SearchResult {
    std::vector<Neighbor> topk;  // ascending (distance, id)
    SearchCounters counters;
};

// Test instrumentation; every callback fires with the threshold in force at
// decision time. Null members are skipped.
struct SearchHooks {
    std::function<void(std::uint32_t node_index, double lambda)> on_prune;       // subtree pruned
    std::function<void(std::uint32_t point_id, double lambda)> on_skip;          // leaf point skipped unverified
    std::function<void(std::uint32_t point_id, double distance)> on_verify;      // full inner product spent
};

// Bounded max-heap over (distance, id) keeping the k smallest candidates.
// lambda() is the k-th smallest verified distance so far, +inf until full.
// Insertion uses strict improvement: a candidate enters only when
// (distance, id) is lexicographically below the current worst entry.
class TopkHeap {
public:
    explicit TopkHeap(std::uint32_t k) : k_(k) { entries_.reserve(k); }

    double lambda() const { return entries_.size() < k_ ? kInfinity : entries_.front().distance; }

    void offer(std::uint32_t id, double distance) {
        if (entries_.size() < k_) {
            entries_.push_back({id, distance});
            std::push_heap(entries_.begin(), entries_.end(), worse);
        } else if (distance < entries_.front().distance) {
            std::pop_heap(entries_.begin(), entries_.end(), worse);
            entries_.back() = {id, distance};
            std::push_heap(entries_.begin(), entries_.end(), worse);
        }
    }

    std::vector<Neighbor> sorted() const {
        std::vector<Neighbor> out = entries_;
        std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
            return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
        });
        return out;
    }

    std::uint32_t capacity() const { return k_; }
    std::size_t size() const { return entries_.size(); }

private:
    // Heap top is the worst entry: largest distance, largest id at ties, so
    // tied evictions keep the lowest ids.
    static bool worse(const Neighbor& a, const Neighbor& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
    }

    std::uint32_t k_;
    std::vector<Neighbor> entries_;
};

}  // namespace p2h
