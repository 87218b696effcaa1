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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernel_tables.hpp"

namespace besov::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(BESOV_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* initial_table() {
  if (const char* env = std::getenv("BESOV_ISA"); env != nullptr && *env != '\0') {
    const Isa requested = parse_isa(env);
    if (!available(requested))
      throw std::runtime_error("BESOV_ISA requests an instruction set this CPU lacks: " +
                               std::string(env));
    return &table(requested);
  }
  return &table(best_available());
}

std::atomic<const Table*>& active_slot() {
  static std::atomic<const Table*> slot{initial_table()};
  return slot;
}

}  // namespace

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa best_available() { return available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const Table& table(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return detail::scalar_table();
    case Isa::avx2:
#if defined(BESOV_HAVE_AVX2_KERNELS)
      if (cpu_has_avx2()) return detail::avx2_table();
#endif
      throw std::runtime_error("avx2 kernels are not available on this CPU/build");
  }
  throw std::invalid_argument("unknown instruction set");
}

const Table& active() { return *active_slot().load(std::memory_order_acquire); }

void select(Isa isa) { active_slot().store(&table(isa), std::memory_order_release); }

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  throw std::invalid_argument("unknown instruction set '" + std::string(name) + "'");
}

}  // namespace besov::kernels
