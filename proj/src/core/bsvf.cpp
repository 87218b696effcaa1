// Copyright 2026 The besov-euler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "besov/bsvf.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <string>

namespace besov {
namespace {

constexpr std::array<char, 4> kMagic{'B', 'S', 'V', 'F'};

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), b.size());
}

void put_f64(std::ostream& out, double x) {
  const auto v = std::bit_cast<std::uint64_t>(x);
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), b.size());
}

template <std::size_t N>
std::array<unsigned char, N> take(std::istream& in) {
  std::array<unsigned char, N> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), N)) throw BsvfError("BSVF: truncated stream");
  return b;
}

std::uint32_t get_u32(std::istream& in) {
  const auto b = take<4>(in);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

double get_f64(std::istream& in) {
  const auto b = take<8>(in);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return std::bit_cast<double>(v);
}

}  // namespace

void write_bsvf(std::ostream& out, const VectorField& field) {
  const Grid& g = field.grid();
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kBsvfVersion);
  put_u32(out, static_cast<std::uint32_t>(g.dim()));
  put_u32(out, static_cast<std::uint32_t>(g.n()));
  put_u32(out, static_cast<std::uint32_t>(field.size()));
  put_f64(out, g.length());
  for (std::size_t c = 0; c < field.size(); ++c)
    for (double x : field[c].values()) put_f64(out, x);
  if (!out) throw BsvfError("BSVF: write failed");
}

void write_bsvf(const std::filesystem::path& path, const VectorField& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BsvfError("BSVF: cannot open " + path.string() + " for writing");
  write_bsvf(out, field);
}

void write_bsvf(const std::filesystem::path& path, const ScalarField& field) {
  write_bsvf(path, VectorField(std::vector<ScalarField>{field}));
}

VectorField read_bsvf(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size())) throw BsvfError("BSVF: truncated stream");
  if (magic != kMagic) throw BsvfError("BSVF: bad magic bytes");
  const std::uint32_t version = get_u32(in);
  if (version != kBsvfVersion)
    throw BsvfError("BSVF: unsupported format version " + std::to_string(version));
  const std::uint32_t d = get_u32(in);
  const std::uint32_t n = get_u32(in);
  const std::uint32_t count = get_u32(in);
  const double length = get_f64(in);
  if (count == 0) throw BsvfError("BSVF: zero components");
  Grid grid = [&] {
    try {
      return Grid(static_cast<int>(d), n, length);
    } catch (const std::invalid_argument& e) {
      throw BsvfError(std::string("BSVF: invalid grid header: ") + e.what());
    }
  }();
  std::vector<ScalarField> comps;
  comps.reserve(count);
  for (std::uint32_t c = 0; c < count; ++c) {
    ScalarField f(grid);
    for (double& x : f.values()) x = get_f64(in);
    comps.push_back(std::move(f));
  }
  return VectorField(std::move(comps));
}

VectorField read_bsvf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BsvfError("BSVF: cannot open " + path.string());
  return read_bsvf(in);
}

}  // namespace besov
