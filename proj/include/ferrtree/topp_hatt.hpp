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
#include <string>
#include <vector>

#include "ferrtree/encoding.hpp"
#include "ferrtree/majorana.hpp"
#include "ferrtree/tree.hpp"

namespace ferrtree {

/// What a tree slot may still receive during optimization.
struct EdgeRestriction {
  enum class Kind : std::uint8_t { FixedChild, EvenLeaf, OddLeaf, Empty, FixedLeaf };

  Kind kind = Kind::Empty;
  std::uint32_t value = 0;  // child id for FixedChild, Majorana index for FixedLeaf

  bool operator==(const EdgeRestriction&) const = default;
};

std::string to_string(const EdgeRestriction& r);

/// A leaf position in the tree.
struct Locus {
  std::uint32_t node = 0;
  Axis axis = Axis::X;

  bool operator==(const Locus&) const = default;
};

/// Even/odd loci of each pair, pair k being the one that holds (2k, 2k+1) in
/// the naive tree.
class LeafPairMap {
 public:
  LeafPairMap() = default;
  explicit LeafPairMap(std::uint32_t n_modes);

  void set(std::uint32_t pair, Locus even, Locus odd);
  std::uint32_t size() const { return static_cast<std::uint32_t>(pairs_.size()); }
  const std::pair<Locus, Locus>& pair(std::uint32_t k) const { return pairs_.at(k); }
  /// Pair id of a leaf locus; O(1).
  std::uint32_t pair_of(Locus l) const;
  /// The other locus of the pair containing `l`.
  Locus partner(Locus l) const;

 private:
  std::vector<std::pair<Locus, Locus>> pairs_;
  std::vector<std::array<std::uint32_t, 3>> lookup_;  // [node][axis] -> pair id
};

using RestrictionTable = std::vector<std::array<EdgeRestriction, 3>>;  // [node][axis]

struct RestrictionInit {
  RestrictionTable restrictions;
  LeafPairMap pairs;
};

/// Restrictions of a naive tree: children fixed, leaves even/odd by the
/// index they hold, the all-Z terminus empty. Throws StructureError if the
/// leaves are not indexed.
RestrictionInit init_restrictions(const TernaryTree& naive);

/// Majorana supports with multiplicities; symbols >= 2M are node aliases.
struct WorkingTerm {
  std::vector<std::uint32_t> support;
  std::uint64_t multiplicity = 1;
};

struct WorkingHamiltonian {
  std::uint32_t n_modes = 0;
  std::vector<WorkingTerm> terms;

  static WorkingHamiltonian from(const MajoranaHamiltonian& h);
  std::uint32_t node_alias(std::uint32_t qubit) const { return 2 * n_modes + qubit; }
  std::uint32_t all_z_alias() const { return 3 * n_modes; }
};

/// Candidate assignment (x, y, z) of symbols to a node's X, Y, Z slots.
using Selection = std::array<std::uint32_t, 3>;

/// Pauli weight the node's qubit contributes: a term counts (with its
/// multiplicity) unless it holds none or all three of x, y, z.
std::uint64_t candidate_weight(const WorkingHamiltonian& h, const Selection& sel);

/// Replaces x, y, z by the node alias, cancels repeated pairs and merges
/// equal supports (multiplicities add).
WorkingHamiltonian reduce_hamiltonian(const WorkingHamiltonian& h, std::uint32_t alias,
                                      const Selection& sel);

struct TraceEntry {
  std::uint32_t iteration = 0;
  std::uint32_t node = 0;
  Selection selection{};
  std::uint64_t weight = 0;
};

struct OptimizeResult {
  TernaryTree tree;
  EnumerationScheme scheme;
  std::vector<TraceEntry> trace;
};

/// Step-wise optimizer state; `optimize` drives it to completion.
class ToppHattState {
 public:
  ToppHattState(const MajoranaHamiltonian& h, const TernaryTree& structure);

  bool finished() const { return iteration_ == tree_.n_modes(); }
  std::uint32_t iteration() const { return iteration_; }

  /// Unprocessed nodes whose children are all processed, restricted to the
  /// greatest depth, in preorder.
  std::vector<std::uint32_t> active_nodes() const;
  /// Allowed selections for `node` in ascending (x, y, z) order.
  std::vector<Selection> candidates(std::uint32_t node) const;
  /// Weight of a selection; throws ArgumentError if it breaks a restriction.
  std::uint64_t candidate_weight(std::uint32_t node, const Selection& sel) const;
  /// Commits a selection on an active node; throws ArgumentError otherwise.
  void commit(std::uint32_t node, const Selection& sel);
  /// One iteration: global minimum over active nodes and candidates.
  TraceEntry step(bool parallel = true);

  const RestrictionTable& restrictions() const { return restrictions_; }
  const LeafPairMap& pairs() const { return pairs_; }
  const WorkingHamiltonian& working() const { return working_; }
  const std::vector<bool>& unassigned() const { return unassigned_; }

  /// Final tree and the mode relabelling from the naive tree; requires
  /// finished().
  OptimizeResult result() const;

 private:
  void check_selection(std::uint32_t node, const Selection& sel) const;

  TernaryTree naive_;
  TernaryTree tree_;
  RestrictionTable restrictions_;
  LeafPairMap pairs_;
  WorkingHamiltonian working_;
  std::vector<bool> unassigned_;
  std::vector<bool> processed_;
  std::uint32_t iteration_ = 0;
  std::vector<TraceEntry> trace_;
};

struct OptimizeOptions {
  bool parallel = true;
};

/// Greedy topology-preserving leaf assignment. Throws DimensionError when
/// the Hamiltonian and tree sizes differ.
OptimizeResult optimize(const MajoranaHamiltonian& h, const TernaryTree& structure,
                        const OptimizeOptions& options = {});

/// Symbol name used in traces: g<j>, n<qubit>, allz.
std::string symbol_name(std::uint32_t symbol, std::uint32_t n_modes);

/// Tab-separated trace, one line per iteration.
std::string format_trace(const std::vector<TraceEntry>& trace, std::uint32_t n_modes);

}  // namespace ferrtree
