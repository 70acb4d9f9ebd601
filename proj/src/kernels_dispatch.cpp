// Copyright 2026 The cubepack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "cubepack/kernels.hpp"

namespace cubepack::kernels {

#ifdef CUBEPACK_HAVE_AVX2_TU
namespace detail {
const Kernels& avx2_impl();
}
#endif

const Kernels* avx2() {
#if defined(CUBEPACK_HAVE_AVX2_TU) && defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) {
    return &detail::avx2_impl();
  }
#endif
  return nullptr;
}

namespace {

const Kernels& pick_default() {
  const char* force = std::getenv("CUBEPACK_KERNELS");
  if (force != nullptr && std::strcmp(force, "scalar") == 0) {
    return scalar();
  }
  if (const Kernels* k = avx2()) {
    return *k;
  }
  return scalar();
}

std::atomic<const Kernels*> g_override{nullptr};

}  // namespace

const Kernels& active() {
  if (const Kernels* k = g_override.load(std::memory_order_acquire)) {
    return *k;
  }
  static const Kernels& chosen = pick_default();
  return chosen;
}

void set_active(const Kernels* k) {
  g_override.store(k, std::memory_order_release);
}

}  // namespace cubepack::kernels
