#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glno {

/// Raw little-endian f64 array file:
///   8-byte magic "GLNOARR\0", u32 rank, u64 dims[rank], f64 payload.
struct ArrayFile {
    std::vector<std::uint64_t> dims;
    std::vector<double> values;

    std::size_t size() const {
        std::size_t n = 1;
        for (auto d : dims) n *= static_cast<std::size_t>(d);
        return n;
    }
};

void write_array(const std::string& path, const ArrayFile& arr);
ArrayFile read_array(const std::string& path);

/// Convenience wrappers for 1-D and 2-D arrays.
void write_array_1d(const std::string& path, const std::vector<double>& v);
void write_array_2d(const std::string& path, const std::vector<double>& v,
                    std::size_t rows, std::size_t cols);

} // namespace glno
