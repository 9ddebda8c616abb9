// Copyright 2026 The scedit Authors
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

#ifndef SCEDIT_PARALLEL_H_
#define SCEDIT_PARALLEL_H_

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scedit {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_num_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Runs body(i) for i in [0, n). Every iteration must be independent of the
// others; results are then identical for any thread count.
template <typename F>
void parallel_for(std::int64_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    body(i);
  }
#else
  for (std::int64_t i = 0; i < n; ++i) {
    body(i);
  }
#endif
}

}  // namespace scedit

#endif  // SCEDIT_PARALLEL_H_
