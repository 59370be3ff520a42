#pragma once

#include <cstdint>
#include <vector>

#include "p2h/dataset.hpp"

namespace p2h {

// Hyperplane coefficients with the first d-1 coordinates rescaled to unit
// norm, so the point-to-hyperplane distance reduces to |<x, q>| on
// dimension-appended points. Coefficients are kept in double: queries are
// few and the unit-norm contract is 1e-9.
struct HyperplaneQuery {
    std::vector<double> coeffs;  // length d
    double norm = 0.0;           // cached ||q|| = sqrt(1 + q_d^2)

    std::uint32_t dim() const { return static_cast<std::uint32_t>(coeffs.size()); }
};

// Divides all coordinates by s = sqrt(sum of the first d-1 squares).
// Throws std::invalid_argument when the normal vector is all zero.
HyperplaneQuery normalize_query(const std::vector<double>& raw);

// Deterministic query generation: unit Gaussian normal direction, offset
// placed so the hyperplane passes near a uniformly chosen data point, with
// Gaussian jitter of 0.05 * (mean raw point norm). Same (data, count, seed)
// always yields the identical list.
std::vector<HyperplaneQuery> generate_queries(const PointSet& data, std::uint32_t count, std::uint64_t seed);

// Fingerprint of a query batch (coefficients only); cache key component.
std::uint64_t query_fingerprint(const std::vector<HyperplaneQuery>& queries);

}  // namespace p2h
