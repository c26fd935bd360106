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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ferrtree/pauli.hpp"

namespace ferrtree {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

char to_char(Axis a);
Pauli to_pauli(Axis a);

/// One outward edge of a tree node.
struct Slot {
  enum class Kind : std::uint8_t { Child, Leaf, AllZ };

  Kind kind = Kind::Leaf;
  std::uint32_t child = 0;                 // valid for Child
  std::optional<std::uint32_t> majorana;   // valid for Leaf

  static Slot make_child(std::uint32_t id) { return {Kind::Child, id, std::nullopt}; }
  static Slot make_leaf(std::optional<std::uint32_t> index = std::nullopt) {
    return {Kind::Leaf, 0, index};
  }
  static Slot make_all_z() { return {Kind::AllZ, 0, std::nullopt}; }

  bool is_child() const { return kind == Kind::Child; }
  bool is_leaf() const { return kind == Kind::Leaf; }
  bool is_all_z() const { return kind == Kind::AllZ; }

  bool operator==(const Slot&) const = default;
};

struct TreeNode {
  std::uint32_t id = 0;
  std::uint32_t qubit = 0;
  std::array<Slot, 3> edges;  // indexed by Axis

  const Slot& edge(Axis a) const { return edges[static_cast<std::size_t>(a)]; }
  Slot& edge(Axis a) { return edges[static_cast<std::size_t>(a)]; }

  bool operator==(const TreeNode&) const = default;
};

/// Ternary tree over M nodes (one qubit each) with 2M leaf slots and one
/// all-Z terminus.
///
/// Node ids are 0..M-1; qubit indices form a bijection onto 0..M-1. The
/// constructor checks every structural invariant and throws StructureError
/// on violation. Leaves are either all unindexed (a structural tree) or all
/// indexed with a permutation of 0..2M-1.
class TernaryTree {
 public:
  TernaryTree() = default;
  TernaryTree(std::uint32_t root, std::vector<TreeNode> nodes);

  std::uint32_t n_modes() const { return static_cast<std::uint32_t>(nodes_.size()); }
  std::uint32_t root() const { return root_; }
  const TreeNode& node(std::uint32_t id) const { return nodes_.at(id); }
  std::span<const TreeNode> nodes() const { return nodes_; }

  /// Parent id and the axis of the edge leading to `id`; nullopt for root.
  std::optional<std::pair<std::uint32_t, Axis>> parent(std::uint32_t id) const;
  std::uint32_t depth(std::uint32_t id) const { return depth_.at(id); }
  /// Child ids of `id` in X, Y, Z order.
  std::vector<std::uint32_t> children(std::uint32_t id) const;

  /// Depth-first order from the root, visiting X before Y before Z.
  std::span<const std::uint32_t> preorder() const { return preorder_; }
  /// Position of `id` in preorder ("left-most first" rank).
  std::uint32_t preorder_rank(std::uint32_t id) const { return rank_.at(id); }
  std::vector<std::uint32_t> bfs_order() const;

  bool leaves_indexed() const;
  /// Copy with all leaf indices cleared.
  TernaryTree structure() const;
  /// Same node ids, qubits and child edges (leaf contents ignored).
  bool same_structure(const TernaryTree& other) const;
  /// Replaces the Majorana index held by a leaf slot; returns the new tree.
  TernaryTree with_leaf(std::uint32_t id, Axis axis, std::optional<std::uint32_t> index) const;

  /// Optional device labels (Bonsai trees carry the device qubit per node).
  std::span<const std::uint32_t> device_qubits() const { return device_qubits_; }
  void set_device_qubits(std::vector<std::uint32_t> labels);

  bool operator==(const TernaryTree& other) const {
    return root_ == other.root_ && nodes_ == other.nodes_;
  }

 private:
  void check_and_index();

  std::uint32_t root_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<std::optional<std::pair<std::uint32_t, Axis>>> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> preorder_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> device_qubits_;
};

enum class StandardTree { JordanWigner, Parity, BravyiKitaev, JKMN };

std::string_view to_string(StandardTree kind);
/// Accepts jw, parity, bk, jkmn (case-insensitive); throws ArgumentError.
StandardTree parse_standard_tree(std::string_view name);

/// Structural tree (leaves unindexed) of a standard encoding. Node id and
/// qubit index coincide and follow breadth-first order, X before Y before Z.
TernaryTree build_standard(StandardTree kind, std::uint32_t n_modes);

/// Populates leaf indices with the naive enumeration: every node starts with
/// a leaf pair on X and Y, a displaced leaf moves to the Z slot of the child
/// that displaced it, and mode m (m = qubit of the originating node) carries
/// (2m, 2m+1) with the even index on the X side of the pair's divergence.
TernaryTree naive_tree(const TernaryTree& t);

/// Undirected qubit connectivity graph.
struct DeviceGraph {
  std::uint32_t n_qubits = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::vector<std::vector<std::uint32_t>> adjacency() const;
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  bool connected() const;
  /// Throws StructureError for self-loops, duplicates or out-of-range ends.
  void check() const;
};

enum class BonsaiHeuristic { Heterogeneous, Homogeneous };

std::string_view to_string(BonsaiHeuristic h);
/// Accepts het/heterogeneous and homo/homogeneous.
BonsaiHeuristic parse_bonsai_heuristic(std::string_view name);

/// Vertex of minimum eccentricity (lowest index on ties).
std::uint32_t default_bonsai_root(const DeviceGraph& g);

/// Ternary tree embedded in the device graph: every parent-child pair is a
/// device edge, the root has at most three children and other nodes at most
/// two. When `n_modes` is smaller than the device, the n_modes qubits closest
/// to the root (breadth-first, ascending index) are used. Node ids and qubit
/// indices are the breadth-first attachment order; the device label of each
/// node is kept in `device_qubits()`.
TernaryTree build_bonsai(const DeviceGraph& g, BonsaiHeuristic heuristic, std::uint32_t root,
                         std::optional<std::uint32_t> n_modes = std::nullopt);

}  // namespace ferrtree
