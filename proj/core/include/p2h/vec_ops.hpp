#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace p2h {

// All accumulations run in double, point storage is float32.

inline double dot(const float* a, const float* b, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return s;
}

inline double dot(const float* x, const double* q, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += static_cast<double>(x[i]) * q[i];
    return s;
}

inline double dot(const double* a, const double* b, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
}

inline double squared_dist(const float* a, const float* b, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double diff = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        s += diff * diff;
    }
    return s;
}

inline double squared_dist(const float* x, const double* c, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double diff = static_cast<double>(x[i]) - c[i];
        s += diff * diff;
    }
    return s;
}

inline double norm(const float* a, std::size_t d) { return std::sqrt(dot(a, a, d)); }
inline double norm(const double* a, std::size_t d) { return std::sqrt(dot(a, a, d)); }

// FNV-1a, used to fingerprint datasets and query batches for cache keys.
inline std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace p2h
