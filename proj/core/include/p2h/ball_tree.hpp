#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "p2h/query.hpp"
#include "p2h/search.hpp"
#include "p2h/tree.hpp"

namespace p2h {

// Branch-and-bound index over a recursive ball partition. Immutable after
// build; concurrent searches are safe, each call owns its own state.
class BallTree {
public:
    static BallTree build(const PointSet& data, std::uint32_t leaf_capacity, std::uint64_t seed);

    // Exact top-k when opts.budget is unlimited; otherwise stops after
    // `budget` candidate verifications and returns the best found so far.
    SearchResult search(const HyperplaneQuery& q, const SearchOptions& opts,
                        const SearchHooks* hooks = nullptr) const;

    std::uint32_t n() const { return n_; }
    std::uint32_t dim() const { return d_; }
    std::uint32_t leaf_capacity() const { return leaf_capacity_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const double* center(std::uint32_t node) const { return centers_.data() + static_cast<std::size_t>(node) * d_; }
    const std::vector<std::uint32_t>& permuted_ids() const { return perm_; }
    const float* point_at(std::uint32_t pos) const { return points_.data() + static_cast<std::size_t>(pos) * d_; }

    void save(const std::string& path) const;
    void save(std::ostream& out) const;
    static BallTree load(const std::string& path, const PointSet& data);
    static BallTree load(std::istream& in, const PointSet& data);
    std::uint64_t serialized_bytes() const;

private:
    friend struct IndexIO;

    std::uint32_t n_ = 0;
    std::uint32_t d_ = 0;
    std::uint32_t leaf_capacity_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<TreeNode> nodes_;
    std::vector<double> centers_;
    std::vector<std::uint32_t> perm_;
    std::vector<float> points_;  // permuted copy of the data, leaf spans contiguous
};

}  // namespace p2h
