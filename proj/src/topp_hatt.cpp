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

#include "ferrtree/topp_hatt.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "ferrtree/error.hpp"

namespace ferrtree {

namespace {

constexpr std::uint32_t kNoPair = std::numeric_limits<std::uint32_t>::max();

std::size_t axis_index(Axis a) { return static_cast<std::size_t>(a); }

bool contains(const std::vector<std::uint32_t>& support, std::uint32_t symbol) {
  return std::find(support.begin(), support.end(), symbol) != support.end();
}

// Inverted lists symbol -> term positions for one iteration.
class TermIndex {
 public:
  explicit TermIndex(const WorkingHamiltonian& h) : h_(h), lists_(3 * h.n_modes + 1) {
    for (std::size_t t = 0; t < h.terms.size(); ++t) {
      for (auto s : h.terms[t].support) lists_.at(s).push_back(static_cast<std::uint32_t>(t));
    }
  }

  std::uint64_t weight(const Selection& sel) const {
    const auto [x, y, z] = sel;
    std::uint64_t w = 0;
    for (auto t : lists_.at(x)) {
      const auto& s = h_.terms[t].support;
      if (!(contains(s, y) && contains(s, z))) w += h_.terms[t].multiplicity;
    }
    for (auto t : lists_.at(y)) {
      if (!contains(h_.terms[t].support, x)) w += h_.terms[t].multiplicity;
    }
    for (auto t : lists_.at(z)) {
      const auto& s = h_.terms[t].support;
      if (!contains(s, x) && !contains(s, y)) w += h_.terms[t].multiplicity;
    }
    return w;
  }

 private:
  const WorkingHamiltonian& h_;
  std::vector<std::vector<std::uint32_t>> lists_;
};

}  // namespace

std::string to_string(const EdgeRestriction& r) {
  switch (r.kind) {
    case EdgeRestriction::Kind::FixedChild: return "FixedChild(" + std::to_string(r.value) + ")";
    case EdgeRestriction::Kind::EvenLeaf: return "EvenLeaf";
    case EdgeRestriction::Kind::OddLeaf: return "OddLeaf";
    case EdgeRestriction::Kind::Empty: return "Empty";
    case EdgeRestriction::Kind::FixedLeaf: return "FixedLeaf(" + std::to_string(r.value) + ")";
  }
  return "?";
}

LeafPairMap::LeafPairMap(std::uint32_t n_modes)
    : pairs_(n_modes), lookup_(n_modes, {kNoPair, kNoPair, kNoPair}) {}

void LeafPairMap::set(std::uint32_t pair, Locus even, Locus odd) {
  pairs_.at(pair) = {even, odd};
  lookup_.at(even.node)[axis_index(even.axis)] = pair;
  lookup_.at(odd.node)[axis_index(odd.axis)] = pair;
}

std::uint32_t LeafPairMap::pair_of(Locus l) const {
  const auto p = lookup_.at(l.node)[axis_index(l.axis)];
  if (p == kNoPair) throw StructureError("locus is not a paired leaf");
  return p;
}

Locus LeafPairMap::partner(Locus l) const {
  const auto& [even, odd] = pairs_.at(pair_of(l));
  return even == l ? odd : even;
}

RestrictionInit init_restrictions(const TernaryTree& naive) {
  if (!naive.leaves_indexed()) throw StructureError("restrictions need an indexed tree");
  const auto m = naive.n_modes();
  RestrictionInit out{RestrictionTable(m), LeafPairMap(m)};
  std::vector<Locus> where(2 * static_cast<std::size_t>(m));
  for (const auto& n : naive.nodes()) {
    for (Axis a : kAxes) {
      const Slot& s = n.edge(a);
      EdgeRestriction& r = out.restrictions[n.id][axis_index(a)];
      if (s.is_child()) {
        r = {EdgeRestriction::Kind::FixedChild, s.child};
      } else if (s.is_all_z()) {
        r = {EdgeRestriction::Kind::Empty, 0};
      } else {
        const auto g = *s.majorana;
        r = {g % 2 == 0 ? EdgeRestriction::Kind::EvenLeaf : EdgeRestriction::Kind::OddLeaf, 0};
        where[g] = Locus{n.id, a};
      }
    }
  }
  for (std::uint32_t k = 0; k < m; ++k) out.pairs.set(k, where[2 * k], where[2 * k + 1]);
  return out;
}

WorkingHamiltonian WorkingHamiltonian::from(const MajoranaHamiltonian& h) {
  WorkingHamiltonian w;
  w.n_modes = h.n_modes();
  w.terms.reserve(h.size());
  for (const auto& t : h.terms()) w.terms.push_back({t.support, 1});
  return w;
}

std::uint64_t candidate_weight(const WorkingHamiltonian& h, const Selection& sel) {
  std::uint64_t w = 0;
  for (const auto& t : h.terms) {
    const bool hx = contains(t.support, sel[0]);
    const bool hy = contains(t.support, sel[1]);
    const bool hz = contains(t.support, sel[2]);
    if (!(hx == hy && hy == hz)) w += t.multiplicity;
  }
  return w;
}

WorkingHamiltonian reduce_hamiltonian(const WorkingHamiltonian& h, std::uint32_t alias,
                                      const Selection& sel) {
  std::map<std::vector<std::uint32_t>, std::uint64_t> merged;
  std::vector<std::uint32_t> support;
  for (const auto& t : h.terms) {
    support.clear();
    for (auto s : t.support) {
      support.push_back(std::find(sel.begin(), sel.end(), s) != sel.end() ? alias : s);
    }
    std::sort(support.begin(), support.end());
    std::vector<std::uint32_t> reduced;
    reduced.reserve(support.size());
    for (auto s : support) {
      if (!reduced.empty() && reduced.back() == s) {
        reduced.pop_back();
      } else {
        reduced.push_back(s);
      }
    }
    merged[std::move(reduced)] += t.multiplicity;
  }
  WorkingHamiltonian out;
  out.n_modes = h.n_modes;
  out.terms.reserve(merged.size());
  for (auto& [s, mult] : merged) out.terms.push_back({s, mult});
  return out;
}

ToppHattState::ToppHattState(const MajoranaHamiltonian& h, const TernaryTree& structure) {
  if (h.n_modes() != structure.n_modes()) {
    throw DimensionError("Hamiltonian has " + std::to_string(h.n_modes()) + " modes; tree has " +
                         std::to_string(structure.n_modes()) + " nodes");
  }
  naive_ = naive_tree(structure.structure());
  tree_ = naive_;
  auto init = init_restrictions(naive_);
  restrictions_ = std::move(init.restrictions);
  pairs_ = std::move(init.pairs);
  working_ = WorkingHamiltonian::from(h);
  unassigned_.assign(h.n_modes(), true);
  processed_.assign(h.n_modes(), false);
}

std::vector<std::uint32_t> ToppHattState::active_nodes() const {
  std::vector<std::uint32_t> ready;
  std::uint32_t max_depth = 0;
  for (const auto id : tree_.preorder()) {
    if (processed_[id]) continue;
    const auto kids = tree_.children(id);
    if (std::all_of(kids.begin(), kids.end(), [&](std::uint32_t c) { return processed_[c]; })) {
      ready.push_back(id);
      max_depth = std::max(max_depth, tree_.depth(id));
    }
  }
  std::erase_if(ready, [&](std::uint32_t id) { return tree_.depth(id) != max_depth; });
  return ready;
}

std::vector<Selection> ToppHattState::candidates(std::uint32_t node) const {
  using Kind = EdgeRestriction::Kind;
  const auto& row = restrictions_.at(node);
  Selection base{};
  // Free slots grouped by the mode they share; group -> axes.
  std::vector<std::vector<Axis>> groups;
  std::array<int, 3> group_of = {-1, -1, -1};
  for (Axis a : kAxes) {
    const auto& r = row[axis_index(a)];
    switch (r.kind) {
      case Kind::FixedChild: base[axis_index(a)] = working_.node_alias(tree_.node(r.value).qubit); break;
      case Kind::Empty: base[axis_index(a)] = working_.all_z_alias(); break;
      case Kind::FixedLeaf: base[axis_index(a)] = r.value; break;
      case Kind::EvenLeaf:
      case Kind::OddLeaf: {
        const Locus p = pairs_.partner({node, a});
        if (p.node == node && group_of[axis_index(p.axis)] >= 0) {
          group_of[axis_index(a)] = group_of[axis_index(p.axis)];
          groups[group_of[axis_index(a)]].push_back(a);
        } else {
          group_of[axis_index(a)] = static_cast<int>(groups.size());
          groups.push_back({a});
        }
        break;
      }
    }
  }
  std::vector<std::uint32_t> modes;
  for (std::uint32_t u = 0; u < unassigned_.size(); ++u) {
    if (unassigned_[u]) modes.push_back(u);
  }
  std::vector<Selection> out;
  std::vector<std::uint32_t> chosen(groups.size());
  auto recurse = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      Selection sel = base;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        for (Axis a : groups[k]) {
          const bool odd = row[axis_index(a)].kind == Kind::OddLeaf;
          sel[axis_index(a)] = 2 * chosen[k] + (odd ? 1 : 0);
        }
      }
      out.push_back(sel);
      return;
    }
    for (auto u : modes) {
      if (std::find(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(g), u) !=
          chosen.begin() + static_cast<std::ptrdiff_t>(g)) {
        continue;
      }
      chosen[g] = u;
      self(self, g + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void ToppHattState::check_selection(std::uint32_t node, const Selection& sel) const {
  using Kind = EdgeRestriction::Kind;
  if (node >= tree_.n_modes()) throw ArgumentError("node out of range");
  const auto& row = restrictions_[node];
  const auto m = working_.n_modes;
  std::array<std::uint32_t, 3> mode_of{};
  for (Axis a : kAxes) {
    const auto& r = row[axis_index(a)];
    const auto v = sel[axis_index(a)];
    const std::string where = "node " + std::to_string(node) + " axis " + to_char(a) + ": ";
    switch (r.kind) {
      case Kind::FixedChild:
        if (v != working_.node_alias(tree_.node(r.value).qubit)) {
          throw ArgumentError(where + "slot is fixed to a child");
        }
        break;
      case Kind::Empty:
        if (v != working_.all_z_alias()) throw ArgumentError(where + "slot is the all-Z terminus");
        break;
      case Kind::FixedLeaf:
        if (v != r.value) throw ArgumentError(where + "slot is fixed to " + std::to_string(r.value));
        break;
      case Kind::EvenLeaf:
      case Kind::OddLeaf: {
        const std::uint32_t parity = r.kind == Kind::OddLeaf ? 1 : 0;
        if (v >= 2 * m || v % 2 != parity) {
          throw ArgumentError(where + "index " + std::to_string(v) + " violates the " +
                              (parity ? "odd" : "even") + " restriction");
        }
        if (!unassigned_[v / 2]) throw ArgumentError(where + "mode already assigned");
        mode_of[axis_index(a)] = v / 2;
        const Locus p = pairs_.partner({node, a});
        const bool partner_free = p.node == node &&
                                  (row[axis_index(p.axis)].kind == Kind::EvenLeaf ||
                                   row[axis_index(p.axis)].kind == Kind::OddLeaf);
        if (partner_free && sel[axis_index(p.axis)] / 2 != v / 2) {
          throw ArgumentError(where + "paired slots must share one mode");
        }
        break;
      }
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto ki = row[i].kind, kj = row[j].kind;
      const bool free_i = ki == Kind::EvenLeaf || ki == Kind::OddLeaf;
      const bool free_j = kj == Kind::EvenLeaf || kj == Kind::OddLeaf;
      if (free_i && free_j && mode_of[i] == mode_of[j] &&
          pairs_.partner({node, kAxes[i]}) != Locus{node, kAxes[j]}) {
        throw ArgumentError("node " + std::to_string(node) + ": one mode used by unpaired slots");
      }
    }
  }
}

std::uint64_t ToppHattState::candidate_weight(std::uint32_t node, const Selection& sel) const {
  check_selection(node, sel);
  return ferrtree::candidate_weight(working_, sel);
}

void ToppHattState::commit(std::uint32_t node, const Selection& sel) {
  using Kind = EdgeRestriction::Kind;
  const auto active = active_nodes();
  if (std::find(active.begin(), active.end(), node) == active.end()) {
    throw ArgumentError("node " + std::to_string(node) + " is not active");
  }
  check_selection(node, sel);
  const auto weight = ferrtree::candidate_weight(working_, sel);
  auto& row = restrictions_[node];
  for (Axis a : kAxes) {
    auto& r = row[axis_index(a)];
    if (r.kind != Kind::EvenLeaf && r.kind != Kind::OddLeaf) continue;
    const auto v = sel[axis_index(a)];
    r = {Kind::FixedLeaf, v};
    unassigned_[v / 2] = false;
    const Locus p = pairs_.partner({node, a});
    if (p.node != node) restrictions_[p.node][axis_index(p.axis)] = {Kind::FixedLeaf, v ^ 1u};
  }
  working_ = reduce_hamiltonian(working_, working_.node_alias(tree_.node(node).qubit), sel);
  processed_[node] = true;
  trace_.push_back({iteration_, node, sel, weight});
  ++iteration_;
}

TraceEntry ToppHattState::step(bool parallel) {
  if (finished()) throw ArgumentError("optimizer already finished");
  struct Candidate {
    std::uint32_t node;
    Selection sel;
  };
  std::vector<Candidate> flat;
  for (const auto node : active_nodes()) {
    for (const auto& sel : candidates(node)) flat.push_back({node, sel});
  }
  if (flat.empty()) throw StructureError("no admissible selection (internal invariant broken)");
  const TermIndex index(working_);
  std::vector<std::uint64_t> weights(flat.size());
  const auto n = static_cast<std::int64_t>(flat.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) weights[i] = index.weight(flat[i].sel);
  } else {
    for (std::int64_t i = 0; i < n; ++i) weights[i] = index.weight(flat[i].sel);
  }
  // First strict minimum in canonical scan order.
  std::size_t best = 0;
  for (std::size_t i = 1; i < flat.size(); ++i) {
    if (weights[i] < weights[best]) best = i;
  }
  commit(flat[best].node, flat[best].sel);
  return trace_.back();
}

OptimizeResult ToppHattState::result() const {
  if (!finished()) throw ArgumentError("optimizer has not finished");
  std::vector<TreeNode> nodes(naive_.nodes().begin(), naive_.nodes().end());
  for (auto& n : nodes) {
    for (Axis a : kAxes) {
      const auto& r = restrictions_[n.id][axis_index(a)];
      if (n.edge(a).is_leaf()) n.edge(a).majorana = r.value;
    }
  }
  OptimizeResult out;
  out.tree = TernaryTree(naive_.root(), std::move(nodes));
  out.tree.set_device_qubits(
      std::vector<std::uint32_t>(naive_.device_qubits().begin(), naive_.device_qubits().end()));
  out.scheme = EnumerationScheme::identity(naive_.n_modes());
  for (std::uint32_t k = 0; k < pairs_.size(); ++k) {
    const Locus even = pairs_.pair(k).first;
    out.scheme.mode_of_pair[k] = restrictions_[even.node][axis_index(even.axis)].value / 2;
  }
  out.trace = trace_;
  return out;
}

OptimizeResult optimize(const MajoranaHamiltonian& h, const TernaryTree& structure,
                        const OptimizeOptions& options) {
  ToppHattState state(h, structure);
  while (!state.finished()) state.step(options.parallel);
  return state.result();
}

std::string symbol_name(std::uint32_t symbol, std::uint32_t n_modes) {
  if (symbol < 2 * n_modes) return "g" + std::to_string(symbol);
  if (symbol < 3 * n_modes) return "n" + std::to_string(symbol - 2 * n_modes);
  return "allz";
}

std::string format_trace(const std::vector<TraceEntry>& trace, std::uint32_t n_modes) {
  std::ostringstream out;
  out << "iter\tnode\tx\ty\tz\tweight\n";
  for (const auto& e : trace) {
    out << e.iteration << '\t' << e.node;
    for (auto s : e.selection) out << '\t' << symbol_name(s, n_modes);
    out << '\t' << e.weight << '\n';
  }
  return out.str();
}

}  // namespace ferrtree
