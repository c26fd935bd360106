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

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <set>

#include "ferrtree/error.hpp"
#include "ferrtree/tree.hpp"
#include "ferrtree/tree_detail.hpp"

namespace ferrtree {

std::vector<std::vector<std::uint32_t>> DeviceGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(n_qubits);
  for (const auto& [a, b] : edges) {
    if (a >= n_qubits || b >= n_qubits) {
      throw StructureError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") out of range");
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool DeviceGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

bool DeviceGraph::connected() const {
  if (n_qubits == 0) return false;
  const auto adj = adjacency();
  std::vector<bool> seen(n_qubits, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::uint32_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_qubits;
}

void DeviceGraph::check() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& [a, b] : edges) {
    if (a >= n_qubits || b >= n_qubits) {
      throw StructureError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") out of range for " + std::to_string(n_qubits) + " qubits");
    }
    if (a == b) throw StructureError("self-loop on qubit " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second) {
      throw StructureError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

std::string_view to_string(BonsaiHeuristic h) {
  return h == BonsaiHeuristic::Heterogeneous ? "het" : "homo";
}

BonsaiHeuristic parse_bonsai_heuristic(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "het" || lower == "heterogeneous") return BonsaiHeuristic::Heterogeneous;
  if (lower == "homo" || lower == "homogeneous") return BonsaiHeuristic::Homogeneous;
  throw ArgumentError("unknown Bonsai heuristic '" + std::string(name) + "'");
}

namespace {

std::vector<std::uint32_t> bfs_distances(const std::vector<std::vector<std::uint32_t>>& adj,
                                         std::uint32_t src) {
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(adj.size(), kInf);
  std::deque<std::uint32_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : adj[v]) {
      if (dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

void check_usable(const DeviceGraph& g) {
  g.check();
  if (!g.connected()) throw StructureError("device graph is not connected");
}

}  // namespace

std::uint32_t default_bonsai_root(const DeviceGraph& g) {
  check_usable(g);
  const auto adj = g.adjacency();
  std::uint32_t best = 0;
  std::uint32_t best_ecc = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t v = 0; v < g.n_qubits; ++v) {
    const auto dist = bfs_distances(adj, v);
    const auto ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

TernaryTree build_bonsai(const DeviceGraph& g, BonsaiHeuristic heuristic, std::uint32_t root,
                         std::optional<std::uint32_t> n_modes) {
  check_usable(g);
  if (root >= g.n_qubits) {
    throw ArgumentError("Bonsai root " + std::to_string(root) + " out of range");
  }
  const std::uint32_t m = n_modes.value_or(g.n_qubits);
  if (m == 0 || m > g.n_qubits) {
    throw ArgumentError("Bonsai needs 1.." + std::to_string(g.n_qubits) + " modes; got " +
                        std::to_string(m));
  }
  const auto adj = g.adjacency();

  // Breadth-first attachment with a child cap of 3 at the root, 2 elsewhere.
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> id_of(g.n_qubits, kNone);
  std::vector<std::uint32_t> device_of;
  std::vector<std::vector<std::uint32_t>> kids;  // by tree id, device labels
  auto attach = [&](std::uint32_t v) {
    id_of[v] = static_cast<std::uint32_t>(device_of.size());
    device_of.push_back(v);
    kids.emplace_back();
  };
  attach(root);
  for (std::size_t head = 0; head < device_of.size() && device_of.size() < m; ++head) {
    const auto v = device_of[head];
    const std::size_t cap = head == 0 ? 3 : 2;
    for (auto w : adj[v]) {
      if (kids[head].size() == cap || device_of.size() == m) break;
      if (id_of[w] != kNone) continue;
      kids[head].push_back(w);
      attach(w);
    }
  }
  if (device_of.size() < m) {
    throw StructureError("device graph admits no degree-capped spanning tree from root " +
                         std::to_string(root));
  }

  std::vector<detail::ChildSlots> children(m);
  for (std::uint32_t id = 0; id < m; ++id) {
    auto order = kids[id];
    std::array<Axis, 3> axes{};
    if (heuristic == BonsaiHeuristic::Heterogeneous) {
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return adj[a].size() > adj[b].size();
      });
      axes = {Axis::Z, Axis::X, Axis::Y};
    } else {
      for (std::size_t k = 0; k < 3; ++k) axes[k] = kAxes[(id + k) % 3];
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      children[id][static_cast<std::size_t>(axes[k])] = id_of[order[k]];
    }
  }
  TernaryTree tree = detail::tree_from_children(0, children, {});
  tree.set_device_qubits(device_of);
  return tree;
}

}  // namespace ferrtree
