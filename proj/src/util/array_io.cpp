#include "glno/util/array_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "glno/util/error.hpp"

namespace glno {

static_assert(std::endian::native == std::endian::little,
              "array files are little-endian; big-endian hosts unsupported");

namespace {
constexpr char kMagic[8] = {'G', 'L', 'N', 'O', 'A', 'R', 'R', '\0'};
}

void write_array(const std::string& path, const ArrayFile& arr) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot open for write: ", path);
    out.write(kMagic, 8);
    const std::uint32_t rank = static_cast<std::uint32_t>(arr.dims.size());
    out.write(reinterpret_cast<const char*>(&rank), sizeof(rank));
    for (std::uint64_t d : arr.dims)
        out.write(reinterpret_cast<const char*>(&d), sizeof(d));
    require(arr.values.size() == arr.size(), "array payload/dims mismatch: ", path);
    out.write(reinterpret_cast<const char*>(arr.values.data()),
              static_cast<std::streamsize>(arr.values.size() * sizeof(double)));
    require(out.good(), "write failed: ", path);
}

ArrayFile read_array(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open: ", path);
    char magic[8];
    in.read(magic, 8);
    require(in.good() && std::memcmp(magic, kMagic, 8) == 0, "bad array magic: ", path);
    std::uint32_t rank = 0;
    in.read(reinterpret_cast<char*>(&rank), sizeof(rank));
    require(in.good() && rank <= 8, "bad array rank: ", path);
    ArrayFile arr;
    arr.dims.resize(rank);
    for (auto& d : arr.dims) in.read(reinterpret_cast<char*>(&d), sizeof(d));
    arr.values.resize(arr.size());
    in.read(reinterpret_cast<char*>(arr.values.data()),
            static_cast<std::streamsize>(arr.values.size() * sizeof(double)));
    require(in.good(), "truncated array file: ", path);
    return arr;
}

void write_array_1d(const std::string& path, const std::vector<double>& v) {
    ArrayFile arr;
    arr.dims = {static_cast<std::uint64_t>(v.size())};
    arr.values = v;
    write_array(path, arr);
}

void write_array_2d(const std::string& path, const std::vector<double>& v,
                    std::size_t rows, std::size_t cols) {
    require(v.size() == rows * cols, "2d array size mismatch");
    ArrayFile arr;
    arr.dims = {rows, cols};
    arr.values = v;
    write_array(path, arr);
}

} // namespace glno
