// Copyright 2026 The iPFL Simulator Authors.
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

#ifndef IPFL_KERNELS_HPP_
#define IPFL_KERNELS_HPP_

#include <cstddef>
#include <string>

namespace ipfl::kernels {

// Dense double-precision primitives behind the trainers and the distance
// computations. Each operation has a scalar reference implementation and an
// AVX2+FMA variant; the active table is chosen once per process, at first
// use, from CPUID (or forced via set_backend / the --kernels CLI flag).
//
// Variants are equivalence-tested against the scalar reference. Reductions
// (dot, squared_distance) may differ from the reference by reassociation
// rounding only; elementwise ops match to within one fused rounding step.
// Within a process the selected backend is fixed, so repeated runs with the
// same seed remain bit-identical.

enum class Backend { kAuto, kScalar, kAvx2 };

struct KernelTable {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  void (*scale)(double alpha, double* x, std::size_t n);
};

const KernelTable& scalar_table();
bool avx2_supported();
const KernelTable* avx2_table();  // null when unavailable at build time

// Selects the backend for the whole process. kAuto picks AVX2 when the CPU
// supports it. May be called again (tests do) but is not thread-safe against
// concurrent kernel calls.
void set_backend(Backend backend);
Backend parse_backend(const std::string& name);  // "auto" | "scalar" | "avx2"
const KernelTable& active();

inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline double squared_distance(const double* a, const double* b, std::size_t n) {
  return active().squared_distance(a, b, n);
}
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}
inline void scale(double alpha, double* x, std::size_t n) {
  active().scale(alpha, x, n);
}

}  // namespace ipfl::kernels

#endif  // IPFL_KERNELS_HPP_
