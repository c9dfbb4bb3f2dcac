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

#include "ipfl/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace ipfl::kernels {
namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* resolve(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &scalar_table();
    case Backend::kAvx2: {
      const KernelTable* t = avx2_table();
      if (t == nullptr || !avx2_supported()) {
        throw std::runtime_error("avx2 kernels not available on this machine");
      }
      return t;
    }
    case Backend::kAuto:
    default: {
      const KernelTable* t = avx2_table();
      if (t != nullptr && avx2_supported()) return t;
      return &scalar_table();
    }
  }
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void set_backend(Backend backend) {
  g_active.store(resolve(backend), std::memory_order_release);
}

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::kAuto;
  if (name == "scalar") return Backend::kScalar;
  if (name == "avx2") return Backend::kAvx2;
  throw std::runtime_error("unknown kernel backend: " + name);
}

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = resolve(Backend::kAuto);
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace ipfl::kernels
