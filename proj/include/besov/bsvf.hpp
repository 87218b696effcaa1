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

#pragma once

// BSVF binary field dump, all integers and reals little-endian:
//
//   "BSVF" | u32 version | u32 d | u32 N | u32 components | f64 L |
//   components x (N^d f64 samples, row-major)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "besov/field.hpp"

namespace besov {

inline constexpr std::uint32_t kBsvfVersion = 1;

class BsvfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_bsvf(std::ostream& out, const VectorField& field);
void write_bsvf(const std::filesystem::path& path, const VectorField& field);
void write_bsvf(const std::filesystem::path& path, const ScalarField& field);

VectorField read_bsvf(std::istream& in);
VectorField read_bsvf(const std::filesystem::path& path);

}  // namespace besov
