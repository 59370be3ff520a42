#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "p2h/query.hpp"
#include "p2h/vec_ops.hpp"

// Distance and lower-bound formulas shared by the trees. Stateless and pure;
// comparisons against the pruning threshold always use strict <, so every
// bound here may safely round down but never up past its true value.

namespace p2h {

// Per-point leaf entry: x_cos = ||x|| cos(phi_x), x_sin = ||x|| sin(phi_x)
// where phi_x is the angle between x and the leaf center, and r_x is the
// distance from x to the leaf center.
struct ConeEntry {
    double x_cos = 0.0;
    double x_sin = 0.0;  // >= 0
    double r_x = 0.0;    // >= 0
};

// Per-(query, leaf) scalars derived from the inner product with the leaf
// center: q_cos = ||q|| cos(theta), q_sin = ||q|| sin(theta).
struct QueryLeafContext {
    double ip_node = 0.0;  // <q, N.c>
    double q_cos = 0.0;
    double q_sin = 0.0;  // >= 0
    double q_norm = 0.0;

    // center_norm == 0 degenerates to q_cos = 0: the angle is undefined and
    // the cone bound collapses to 0, which is always sound.
    static QueryLeafContext make(double ip_node, double center_norm, double q_norm) {
        QueryLeafContext ctx;
        ctx.ip_node = ip_node;
        ctx.q_norm = q_norm;
        ctx.q_cos = center_norm > 0.0 ? ip_node / center_norm : 0.0;
        ctx.q_sin = std::sqrt(std::max(q_norm * q_norm - ctx.q_cos * ctx.q_cos, 0.0));
        return ctx;
    }
};

// |<x, q>| on a dimension-appended point, accumulated in double.
inline double p2h_distance(const float* x, std::size_t x_dim, const HyperplaneQuery& q) {
    if (x_dim != q.coeffs.size()) throw std::invalid_argument("p2h_distance: dimension mismatch");
    return std::fabs(dot(x, q.coeffs.data(), x_dim));
}

inline double p2h_distance(const std::vector<float>& x, const HyperplaneQuery& q) {
    return p2h_distance(x.data(), x.size(), q);
}

// Node-level ball bound: no point inside the ball (center ip ip_qc, radius)
// can have |<x,q>| below this.
inline double node_ball_bound(double ip_qc, double q_norm, double radius) {
    return std::max(std::fabs(ip_qc) - q_norm * radius, 0.0);
}

// Same formula with the per-point radius r_x; shares the leaf center ip.
inline double point_ball_bound(double ip_qc, double q_norm, double r_x) {
    return node_ball_bound(ip_qc, q_norm, r_x);
}

// Point-level cone bound. With a = q_cos*x_cos and b = q_sin*x_sin,
// a - b = ||x|| ||q|| cos(theta + phi_x) and a + b = ||x|| ||q|| cos(|theta - phi_x|).
inline double point_cone_bound(const QueryLeafContext& ctx, const ConeEntry& entry) {
    const double a = ctx.q_cos * entry.x_cos;
    const double b = ctx.q_sin * entry.x_sin;
    if (a - b > 0.0 && ctx.q_cos > 0.0 && entry.x_cos > 0.0) return a - b;
    if (a + b < 0.0) return -(a + b);
    return 0.0;
}

// Right-child center inner product from the parent's and left child's, via
// the linearity of the center: n * c = n_l * c_l + n_r * c_r.
inline double child_ip(double ip_parent, double ip_left, std::uint32_t n, std::uint32_t n_l, std::uint32_t n_r) {
    if (n != n_l + n_r || n_r == 0) throw std::invalid_argument("child_ip: sizes must satisfy n == n_l + n_r, n_r >= 1");
    const double dn = static_cast<double>(n);
    const double dr = static_cast<double>(n_r);
    return (dn / dr) * ip_parent - (static_cast<double>(n_l) / dr) * ip_left;
}

}  // namespace p2h
