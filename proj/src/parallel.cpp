// Copyright 2026 The ferrtree Authors
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

#include "ferrtree/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "ferrtree/error.hpp"

namespace ferrtree {

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) {
  if (n < 1) throw ArgumentError("thread count must be at least 1");
  omp_set_num_threads(n);
}

std::optional<int> threads_from_env() {
  const char* raw = std::getenv("FERRTREE_THREADS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int n = std::stoi(raw, &used);
    if (used != std::string(raw).size() || n < 1) throw std::invalid_argument(raw);
    return n;
  } catch (const std::exception&) {
    throw ArgumentError(std::string("FERRTREE_THREADS must be a positive integer; got '") + raw +
                        "'");
  }
}

}  // namespace ferrtree
