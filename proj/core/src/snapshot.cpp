#include "rnls/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rnls {

static_assert(std::endian::native == std::endian::little,
              "RNLS1 writer assumes a little-endian host");

namespace {

constexpr unsigned char kMagic[4] = {0x52, 0x4E, 0x4C, 0x53};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("snapshot: truncated file");
  return v;
}

}  // namespace

void write_snapshot(const Field& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("snapshot: cannot open " + path);
  os.write(reinterpret_cast<const char*>(kMagic), 4);
  put<std::uint32_t>(os, kVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.d));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.k));
  for (int j = 0; j < f.grid.d; ++j)
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.dims[j]));
  for (int j = 0; j < f.grid.d; ++j) put<double>(os, f.grid.lengths[j]);
  for (const auto& z : f.values) {
    put<double>(os, z.real());
    put<double>(os, z.imag());
  }
  if (!os) throw std::runtime_error("snapshot: write failed for " + path);
}

Field read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("snapshot: cannot open " + path);
  unsigned char magic[4];
  is.read(reinterpret_cast<char*>(magic), 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("snapshot: bad magic in " + path);
  if (get<std::uint32_t>(is) != kVersion)
    throw std::runtime_error("snapshot: unsupported version in " + path);
  const int d = static_cast<int>(get<std::uint32_t>(is));
  const int k = static_cast<int>(get<std::uint32_t>(is));
  std::vector<int> dims(d);
  std::vector<double> lengths(d);
  for (int j = 0; j < d; ++j)
    dims[j] = static_cast<int>(get<std::uint32_t>(is));
  for (int j = 0; j < d; ++j) lengths[j] = get<double>(is);
  Field f = make_field(make_grid(d, k, dims, lengths));
  for (auto& z : f.values) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    z = complexd(re, im);
  }
  if (!all_finite(f))
    throw std::runtime_error("snapshot: non-finite samples in " + path);
  return f;
}

}  // namespace rnls
