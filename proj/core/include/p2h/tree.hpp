#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "p2h/dataset.hpp"

namespace p2h {

enum class TreeKind : std::uint8_t { ball = 0, bc = 1 };

// One node of a (pre-order stored) binary ball tree. Leaves own the
// contiguous span [begin, end) of the permuted point order; internal nodes
// cover the union of their children's spans.
struct TreeNode {
    std::uint32_t size = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::int32_t left = -1;  // node indices, -1 marks a leaf
    std::int32_t right = -1;
    double radius = 0.0;
    double center_norm = 0.0;

    bool is_leaf() const { return left < 0; }
};

// Seed-grow pivot selection on the subset `ids`: picks the point furthest
// from ids[seed_pos], then the point furthest from that one. argmax ties
// resolve to the lowest point id. Returns (pivot_l, pivot_r) as point ids.
std::pair<std::uint32_t, std::uint32_t> split_pivots_from(const PointSet& data,
                                                          std::span<const std::uint32_t> ids,
                                                          std::uint32_t seed_pos);

// Random-seed variant; draws the seed position from `rng`.
std::pair<std::uint32_t, std::uint32_t> split_pivots(const PointSet& data,
                                                     std::span<const std::uint32_t> ids,
                                                     std::mt19937_64& rng);

namespace detail {

// Everything both trees need out of construction. The splitting recursion
// and its rng consumption are identical for both kinds, so a ball tree and
// a bc tree built from the same (data, leaf_capacity, seed) share topology.
struct BuiltTree {
    std::vector<TreeNode> nodes;     // pre-order; root at 0, left child at parent+1
    std::vector<double> centers;     // nodes.size() * d
    std::vector<std::uint32_t> perm; // position -> original point id
    // bc only, indexed by permuted position:
    std::vector<double> rx;
    std::vector<double> xcos;
    std::vector<double> xsin;
};

BuiltTree build_tree(const PointSet& data, std::uint32_t leaf_capacity, std::uint64_t seed, TreeKind kind);

}  // namespace detail

}  // namespace p2h
