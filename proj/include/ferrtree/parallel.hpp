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

#pragma once

#include <optional>

namespace ferrtree {

/// Worker count used by the OpenMP kernels.
int thread_count();
/// Sets the worker count; n < 1 throws ArgumentError.
void set_thread_count(int n);
/// Value of FERRTREE_THREADS if set; throws ArgumentError if malformed.
std::optional<int> threads_from_env();

}  // namespace ferrtree
