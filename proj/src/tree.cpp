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

#include "ferrtree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "ferrtree/error.hpp"
#include "ferrtree/tree_detail.hpp"

namespace ferrtree {

char to_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

Pauli to_pauli(Axis a) {
  switch (a) {
    case Axis::X: return Pauli::X;
    case Axis::Y: return Pauli::Y;
    case Axis::Z: return Pauli::Z;
  }
  return Pauli::I;
}

TernaryTree::TernaryTree(std::uint32_t root, std::vector<TreeNode> nodes)
    : root_(root), nodes_(std::move(nodes)) {
  check_and_index();
}

void TernaryTree::check_and_index() {
  const auto m = static_cast<std::uint32_t>(nodes_.size());
  if (m == 0) throw StructureError("tree has no nodes");
  std::sort(nodes_.begin(), nodes_.end(),
            [](const TreeNode& a, const TreeNode& b) { return a.id < b.id; });
  std::vector<bool> qubit_seen(m, false);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (nodes_[i].id != i) {
      throw StructureError("node ids must be 0.." + std::to_string(m - 1) + "; found " +
                           std::to_string(nodes_[i].id));
    }
    const auto q = nodes_[i].qubit;
    if (q >= m) throw StructureError("node " + std::to_string(i) + ": qubit index out of range");
    if (qubit_seen[q]) throw StructureError("duplicate qubit index " + std::to_string(q));
    qubit_seen[q] = true;
  }
  if (root_ >= m) throw StructureError("root id out of range");

  parent_.assign(m, std::nullopt);
  std::vector<std::uint32_t> in_degree(m, 0);
  std::size_t all_z = 0;
  std::size_t leaves = 0;
  std::size_t indexed = 0;
  std::vector<bool> index_seen(2 * static_cast<std::size_t>(m), false);
  for (const auto& n : nodes_) {
    for (Axis a : kAxes) {
      const Slot& s = n.edge(a);
      switch (s.kind) {
        case Slot::Kind::Child:
          if (s.child >= m) throw StructureError("node " + std::to_string(n.id) + ": child out of range");
          if (s.child == root_) throw StructureError("root has a parent edge (cycle)");
          if (++in_degree[s.child] > 1) {
            throw StructureError("node " + std::to_string(s.child) + " has more than one parent");
          }
          parent_[s.child] = std::make_pair(n.id, a);
          break;
        case Slot::Kind::Leaf:
          ++leaves;
          if (s.majorana) {
            ++indexed;
            const auto g = *s.majorana;
            if (g >= 2 * m) throw StructureError("leaf index " + std::to_string(g) + " out of range");
            if (index_seen[g]) throw StructureError("duplicate leaf index " + std::to_string(g));
            index_seen[g] = true;
          }
          break;
        case Slot::Kind::AllZ:
          ++all_z;
          break;
      }
    }
  }
  if (all_z != 1) {
    throw StructureError("tree must have exactly one all-Z terminus; found " + std::to_string(all_z));
  }
  if (leaves != 2 * static_cast<std::size_t>(m)) {
    throw StructureError("tree must have " + std::to_string(2 * m) + " leaves; found " +
                         std::to_string(leaves));
  }
  if (indexed != 0 && indexed != leaves) {
    throw StructureError("leaves must be either all indexed or all unindexed");
  }

  // Connectivity from root; also computes depth and preorder.
  depth_.assign(m, 0);
  preorder_.clear();
  preorder_.reserve(m);
  std::vector<std::uint32_t> stack{root_};
  std::vector<bool> visited(m, false);
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    if (visited[id]) throw StructureError("cycle through node " + std::to_string(id));
    visited[id] = true;
    preorder_.push_back(id);
    const auto& n = nodes_[id];
    for (auto it = kAxes.rbegin(); it != kAxes.rend(); ++it) {
      const Slot& s = n.edge(*it);
      if (s.is_child()) {
        depth_[s.child] = depth_[id] + 1;
        stack.push_back(s.child);
      }
    }
  }
  if (preorder_.size() != m) throw StructureError("tree is not connected to the root");

  // The terminus must close the all-Z path.
  std::uint32_t cur = root_;
  while (nodes_[cur].edge(Axis::Z).is_child()) cur = nodes_[cur].edge(Axis::Z).child;
  if (!nodes_[cur].edge(Axis::Z).is_all_z()) {
    throw StructureError("all-Z terminus is not at the end of the all-Z path");
  }

  rank_.assign(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) rank_[preorder_[i]] = i;
  if (!device_qubits_.empty() && device_qubits_.size() != m) device_qubits_.clear();
}

std::optional<std::pair<std::uint32_t, Axis>> TernaryTree::parent(std::uint32_t id) const {
  return parent_.at(id);
}

std::vector<std::uint32_t> TernaryTree::children(std::uint32_t id) const {
  std::vector<std::uint32_t> out;
  for (Axis a : kAxes) {
    const Slot& s = node(id).edge(a);
    if (s.is_child()) out.push_back(s.child);
  }
  return out;
}

std::vector<std::uint32_t> TernaryTree::bfs_order() const {
  std::vector<std::uint32_t> order;
  order.reserve(nodes_.size());
  std::deque<std::uint32_t> queue{root_};
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    order.push_back(id);
    for (auto c : children(id)) queue.push_back(c);
  }
  return order;
}

bool TernaryTree::leaves_indexed() const {
  for (const auto& n : nodes_) {
    for (Axis a : kAxes) {
      const Slot& s = n.edge(a);
      if (s.is_leaf() && !s.majorana) return false;
    }
  }
  return true;
}

TernaryTree TernaryTree::structure() const {
  TernaryTree out = *this;
  for (auto& n : out.nodes_) {
    for (Axis a : kAxes) {
      if (n.edge(a).is_leaf()) n.edge(a).majorana.reset();
    }
  }
  return out;
}

bool TernaryTree::same_structure(const TernaryTree& other) const {
  if (root_ != other.root_ || nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& a = nodes_[i];
    const auto& b = other.nodes_[i];
    if (a.id != b.id || a.qubit != b.qubit) return false;
    for (Axis ax : kAxes) {
      const Slot& sa = a.edge(ax);
      const Slot& sb = b.edge(ax);
      if (sa.kind != sb.kind) return false;
      if (sa.is_child() && sa.child != sb.child) return false;
    }
  }
  return true;
}

TernaryTree TernaryTree::with_leaf(std::uint32_t id, Axis axis,
                                   std::optional<std::uint32_t> index) const {
  TernaryTree out = *this;
  Slot& s = out.nodes_.at(id).edge(axis);
  if (!s.is_leaf()) throw StructureError("slot is not a leaf");
  s.majorana = index;
  return out;
}

void TernaryTree::set_device_qubits(std::vector<std::uint32_t> labels) {
  if (!labels.empty() && labels.size() != nodes_.size()) {
    throw DimensionError("device label count does not match node count");
  }
  device_qubits_ = std::move(labels);
}

namespace detail {

TernaryTree tree_from_children(std::uint32_t root, std::span<const ChildSlots> children,
                               std::span<const std::uint32_t> qubits) {
  const auto m = static_cast<std::uint32_t>(children.size());
  std::vector<TreeNode> nodes(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    nodes[i].id = i;
    nodes[i].qubit = qubits.empty() ? i : qubits[i];
    for (Axis a : kAxes) {
      const auto& c = children[i][static_cast<std::size_t>(a)];
      nodes[i].edge(a) = c ? Slot::make_child(*c) : Slot::make_leaf();
    }
  }
  std::uint32_t cur = root;
  while (nodes.at(cur).edge(Axis::Z).is_child()) cur = nodes[cur].edge(Axis::Z).child;
  nodes[cur].edge(Axis::Z) = Slot::make_all_z();
  return TernaryTree(root, std::move(nodes));
}

TernaryTree relabel_bfs(std::uint32_t root, std::span<const ChildSlots> children) {
  const auto m = static_cast<std::uint32_t>(children.size());
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> label(m, m);
  std::deque<std::uint32_t> queue{root};
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (label[v] != m) throw StructureError("abstract tree has a cycle");
    label[v] = static_cast<std::uint32_t>(order.size());
    order.push_back(v);
    for (const auto& c : children[v]) {
      if (c) queue.push_back(*c);
    }
  }
  if (order.size() != m) throw StructureError("abstract tree is not connected");
  std::vector<ChildSlots> relabeled(m);
  for (std::uint32_t v = 0; v < m; ++v) {
    for (std::size_t a = 0; a < 3; ++a) {
      if (children[v][a]) relabeled[label[v]][a] = label[*children[v][a]];
    }
  }
  return tree_from_children(0, relabeled, {});
}

}  // namespace detail

std::string_view to_string(StandardTree kind) {
  switch (kind) {
    case StandardTree::JordanWigner: return "jw";
    case StandardTree::Parity: return "parity";
    case StandardTree::BravyiKitaev: return "bk";
    case StandardTree::JKMN: return "jkmn";
  }
  return "?";
}

StandardTree parse_standard_tree(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "jw" || lower == "jordan-wigner") return StandardTree::JordanWigner;
  if (lower == "parity" || lower == "pe") return StandardTree::Parity;
  if (lower == "bk" || lower == "bravyi-kitaev") return StandardTree::BravyiKitaev;
  if (lower == "jkmn") return StandardTree::JKMN;
  throw ArgumentError("unknown tree kind '" + std::string(name) + "'");
}

TernaryTree build_standard(StandardTree kind, std::uint32_t n_modes) {
  using detail::ChildSlots;
  if (n_modes == 0) throw ArgumentError("standard tree needs at least one mode");
  const std::uint32_t m = n_modes;
  std::vector<ChildSlots> children(m);
  constexpr std::size_t kX = 0, kZ = 2;
  switch (kind) {
    case StandardTree::JordanWigner:
      for (std::uint32_t i = 0; i + 1 < m; ++i) children[i][kZ] = i + 1;
      return detail::tree_from_children(0, children, {});
    case StandardTree::Parity:
      for (std::uint32_t i = 0; i + 1 < m; ++i) children[i][kX] = i + 1;
      return detail::tree_from_children(0, children, {});
    case StandardTree::JKMN:
      for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t a = 0; a < 3; ++a) {
          const std::uint32_t c = 3 * i + 1 + a;
          if (c < m) children[i][a] = c;
        }
      }
      return detail::tree_from_children(0, children, {});
    case StandardTree::BravyiKitaev: {
      // Fenwick (update-set) forest, turned into a ternary tree by the
      // left-child / right-sibling rule: first child on X, next sibling on Z.
      std::vector<std::vector<std::uint32_t>> fenwick(m);
      std::vector<std::uint32_t> roots;
      for (std::uint32_t j = 0; j < m; ++j) {
        const std::uint32_t p = j | (j + 1);
        if (p < m) {
          fenwick[p].push_back(j);
        } else {
          roots.push_back(j);
        }
      }
      auto link_siblings = [&](const std::vector<std::uint32_t>& sibs) {
        for (std::size_t k = 0; k + 1 < sibs.size(); ++k) children[sibs[k]][kZ] = sibs[k + 1];
      };
      for (std::uint32_t j = 0; j < m; ++j) {
        if (!fenwick[j].empty()) {
          children[j][kX] = fenwick[j].front();
          link_siblings(fenwick[j]);
        }
      }
      link_siblings(roots);
      return detail::relabel_bfs(roots.front(), children);
    }
  }
  throw ArgumentError("unknown tree kind");
}

TernaryTree naive_tree(const TernaryTree& t) {
  struct Item {
    bool all_z = false;
    std::uint32_t index = 0;
  };
  const auto m = t.n_modes();
  std::vector<TreeNode> nodes(t.nodes().begin(), t.nodes().end());
  std::vector<Item> carry(m);
  carry[t.root()] = Item{true, 0};
  for (const auto id : t.bfs_order()) {
    TreeNode& n = nodes[id];
    const std::uint32_t mode = n.qubit;
    const std::array<Item, 3> items = {Item{false, 2 * mode}, Item{false, 2 * mode + 1}, carry[id]};
    for (Axis a : kAxes) {
      Slot& s = n.edge(a);
      const Item& item = items[static_cast<std::size_t>(a)];
      if (s.is_child()) {
        carry[s.child] = item;
      } else if (item.all_z) {
        s = Slot::make_all_z();
      } else {
        s = Slot::make_leaf(item.index);
      }
    }
  }
  TernaryTree out(t.root(), std::move(nodes));
  out.set_device_qubits(std::vector<std::uint32_t>(t.device_qubits().begin(), t.device_qubits().end()));
  return out;
}

}  // namespace ferrtree
