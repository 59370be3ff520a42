#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2h {

// Raised for file/ingestion problems (missing file, malformed record,
// inconsistent dimensionality). API misuse throws std::invalid_argument.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

enum class VectorFormat { fvecs, bvecs, csv, raw_f32 };

const char* format_name(VectorFormat f);
VectorFormat parse_format(const std::string& name);
// Guesses the format from a file extension; throws DataError when unknown.
VectorFormat format_from_path(const std::string& path);

// Dimension-appended dataset: each stored row is x = (p; 1), so the last
// coordinate of every row is exactly 1 and d = raw dimension + 1.
// Rows are deduplicated bitwise at construction, ids are 0..n-1 in
// first-occurrence order. Immutable after construction.
class PointSet {
public:
    PointSet() = default;

    // `raw` holds n_raw * d_raw floats, row-major, *without* the appended
    // coordinate. Duplicate rows are dropped, first occurrence wins.
    static PointSet from_raw(const std::vector<float>& raw, std::uint32_t d_raw);

    std::uint32_t n() const { return n_; }
    std::uint32_t dim() const { return d_; }  // appended dimension
    const float* row(std::uint32_t id) const { return values_.data() + static_cast<std::size_t>(id) * d_; }
    const std::vector<float>& values() const { return values_; }

    // 64-bit hash of the stored bytes plus (n, d); cache key for ground truth.
    std::uint64_t fingerprint() const;

private:
    std::uint32_t n_ = 0;
    std::uint32_t d_ = 0;
    std::vector<float> values_;  // n * d, row-major
};

// (p_1,...,p_m) -> (p_1,...,p_m,1). Rejects empty or non-finite input.
std::vector<float> append_dimension(const std::vector<float>& raw);

// Reads a vector file and returns the dimension-appended, deduplicated set.
PointSet load_vectors(const std::string& path, VectorFormat format);

// Writes the raw (un-appended) rows in the raw_f32 layout:
// [u32 n][u32 d_raw][n*d_raw float32], little-endian.
void save_raw_f32(const PointSet& data, const std::string& path);

}  // namespace p2h
