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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ferrtree/pauli.hpp"
#include "ferrtree/tree.hpp"

namespace ferrtree {

/// Ordered Majorana strings; strings[j] encodes gamma_j.
struct Encoding {
  std::uint32_t n_modes = 0;
  std::vector<PauliString> strings;

  bool operator==(const Encoding&) const = default;
};

/// Relabelling of modes and qubits. `mode_of_pair[k]` is the mode that takes
/// over the string pair (2k, 2k+1); `qubit_of_node[q]` is the new position of
/// qubit q. An empty vector means the identity.
struct EnumerationScheme {
  std::vector<std::uint32_t> mode_of_pair;
  std::vector<std::uint32_t> qubit_of_node;

  static EnumerationScheme identity(std::uint32_t n_modes);
  bool operator==(const EnumerationScheme&) const = default;
};

/// Root-to-leaf path strings. Throws StructureError on an unindexed leaf.
Encoding strings_from_tree(const TernaryTree& t);

/// Permutes string pairs (rows) and string positions (columns). Throws
/// ArgumentError if either map is not a bijection of the right size.
Encoding apply_enumeration(const Encoding& e, const EnumerationScheme& s);
Encoding apply_enumeration(const TernaryTree& t, const EnumerationScheme& s);
/// Same relabelling applied to the tree's leaf indices and qubit indices.
TernaryTree relabel_tree(const TernaryTree& t, const EnumerationScheme& s);

struct ValidityReport {
  std::size_t n_strings = 0;
  bool count_ok = false;
  bool lengths_ok = false;
  bool anticommuting = false;
  std::size_t rank = 0;
  bool full_rank = false;
  bool constant_one_nto = false;
  std::size_t max_nto = 0;
  /// First offending pair for a commuting-pair failure.
  std::optional<std::pair<std::size_t, std::size_t>> commuting_pair;

  bool valid() const { return count_ok && lengths_ok && anticommuting && full_rank; }
};

/// Never throws; failures are recorded in the report.
ValidityReport validate(const Encoding& e);

/// Rank over GF(2) of the (x|z) bit rows of `strings`.
std::size_t symplectic_rank(const std::vector<PauliString>& strings);

struct VacuumReport {
  bool preserving = false;
  /// First mode whose i*g_2m*g_2m+1 is not a -1 eigen-operator of |0...0>.
  std::optional<std::uint32_t> first_bad_mode;
};

/// Checks that i*g_2m*g_2m+1 is an {I,Z} string acting as -1 on |0...0>.
VacuumReport check_vacuum(const Encoding& e);

/// Symmetric 2M x 2M matrix of pairwise non-trivial overlaps.
std::vector<std::vector<std::uint32_t>> nto_matrix(const Encoding& e);

/// Constructive high-overlap encoding: valid, vacuum preserving, maximum
/// pairwise NTO M-1 for even M (M-2 for odd M). Throws ArgumentError for M < 2.
Encoding build_maxnto(std::uint32_t n_modes);

}  // namespace ferrtree
