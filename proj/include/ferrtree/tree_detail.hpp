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

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "ferrtree/tree.hpp"

namespace ferrtree::detail {

/// Child id per axis (X, Y, Z) of an abstract node.
using ChildSlots = std::array<std::optional<std::uint32_t>, 3>;

/// Structural tree from child lists; node i gets qubit qubits[i] (or i when
/// `qubits` is empty). The all-Z terminus closes the root's Z path.
TernaryTree tree_from_children(std::uint32_t root, std::span<const ChildSlots> children,
                               std::span<const std::uint32_t> qubits);

/// Same, with nodes renumbered breadth-first (X, Y, Z) from `root`.
TernaryTree relabel_bfs(std::uint32_t root, std::span<const ChildSlots> children);

}  // namespace ferrtree::detail
