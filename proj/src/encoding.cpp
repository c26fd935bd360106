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

#include "ferrtree/encoding.hpp"

#include <algorithm>
#include <bit>

#include "ferrtree/error.hpp"

namespace ferrtree {

EnumerationScheme EnumerationScheme::identity(std::uint32_t n_modes) {
  EnumerationScheme s;
  s.mode_of_pair.resize(n_modes);
  s.qubit_of_node.resize(n_modes);
  for (std::uint32_t i = 0; i < n_modes; ++i) s.mode_of_pair[i] = s.qubit_of_node[i] = i;
  return s;
}

Encoding strings_from_tree(const TernaryTree& t) {
  const auto m = t.n_modes();
  Encoding e;
  e.n_modes = m;
  e.strings.assign(2 * static_cast<std::size_t>(m), PauliString(m));
  std::vector<PauliString> prefix(m, PauliString(m));
  for (const auto id : t.preorder()) {
    const TreeNode& n = t.node(id);
    for (Axis a : kAxes) {
      const Slot& s = n.edge(a);
      if (s.is_all_z()) continue;
      PauliString path = prefix[id];
      path.set(n.qubit, to_pauli(a));
      if (s.is_child()) {
        prefix[s.child] = std::move(path);
      } else {
        if (!s.majorana) {
          throw StructureError("leaf on node " + std::to_string(id) + " axis " + to_char(a) +
                               " has no Majorana index");
        }
        e.strings[*s.majorana] = std::move(path);
      }
    }
  }
  return e;
}

namespace {

std::vector<std::uint32_t> checked_perm(const std::vector<std::uint32_t>& p, std::uint32_t n,
                                        const char* what) {
  if (p.empty()) {
    std::vector<std::uint32_t> id(n);
    for (std::uint32_t i = 0; i < n; ++i) id[i] = i;
    return id;
  }
  if (p.size() != n) {
    throw ArgumentError(std::string(what) + " map has " + std::to_string(p.size()) +
                        " entries; expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) throw ArgumentError(std::string(what) + " map is not a bijection");
    seen[v] = true;
  }
  return p;
}

}  // namespace

Encoding apply_enumeration(const Encoding& e, const EnumerationScheme& s) {
  const auto m = e.n_modes;
  if (e.strings.size() != 2 * static_cast<std::size_t>(m)) {
    throw DimensionError("encoding has " + std::to_string(e.strings.size()) + " strings for " +
                         std::to_string(m) + " modes");
  }
  const auto modes = checked_perm(s.mode_of_pair, m, "mode");
  const auto qubits = checked_perm(s.qubit_of_node, m, "qubit");
  Encoding out;
  out.n_modes = m;
  out.strings.assign(e.strings.size(), PauliString(m));
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      const PauliString& src = e.strings[2 * k + b];
      if (src.size() != m) throw DimensionError("string length does not match mode count");
      PauliString& dst = out.strings[2 * modes[k] + b];
      for (std::uint32_t q = 0; q < m; ++q) dst.set(qubits[q], src.at(q));
    }
  }
  return out;
}

TernaryTree relabel_tree(const TernaryTree& t, const EnumerationScheme& s) {
  const auto m = t.n_modes();
  const auto modes = checked_perm(s.mode_of_pair, m, "mode");
  const auto qubits = checked_perm(s.qubit_of_node, m, "qubit");
  std::vector<TreeNode> nodes(t.nodes().begin(), t.nodes().end());
  for (auto& n : nodes) {
    n.qubit = qubits[n.qubit];
    for (Axis a : kAxes) {
      Slot& slot = n.edge(a);
      if (slot.is_leaf() && slot.majorana) {
        const auto g = *slot.majorana;
        slot.majorana = 2 * modes[g / 2] + (g % 2);
      }
    }
  }
  TernaryTree out(t.root(), std::move(nodes));
  out.set_device_qubits(std::vector<std::uint32_t>(t.device_qubits().begin(), t.device_qubits().end()));
  return out;
}

Encoding apply_enumeration(const TernaryTree& t, const EnumerationScheme& s) {
  return strings_from_tree(relabel_tree(t, s));
}

std::size_t symplectic_rank(const std::vector<PauliString>& strings) {
  if (strings.empty()) return 0;
  const std::size_t words = strings.front().x_words().size();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(strings.size());
  for (const auto& s : strings) {
    std::vector<std::uint64_t> row(2 * words, 0);
    const auto xs = s.x_words();
    const auto zs = s.z_words();
    std::copy(xs.begin(), xs.end(), row.begin());
    std::copy(zs.begin(), zs.end(), row.begin() + static_cast<std::ptrdiff_t>(words));
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  const std::size_t n_cols = 2 * words * 64;
  for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

ValidityReport validate(const Encoding& e) {
  ValidityReport r;
  r.n_strings = e.strings.size();
  r.count_ok = r.n_strings == 2 * static_cast<std::size_t>(e.n_modes);
  r.lengths_ok = std::all_of(e.strings.begin(), e.strings.end(),
                             [&](const PauliString& s) { return s.size() == e.n_modes; });
  if (!r.lengths_ok) return r;
  r.anticommuting = true;
  r.constant_one_nto = true;
  for (std::size_t i = 0; i < e.strings.size(); ++i) {
    for (std::size_t j = i + 1; j < e.strings.size(); ++j) {
      const auto k = nto(e.strings[i], e.strings[j]);
      r.max_nto = std::max(r.max_nto, k);
      if (k != 1) r.constant_one_nto = false;
      if (k % 2 == 0 && r.anticommuting) {
        r.anticommuting = false;
        r.commuting_pair = std::make_pair(i, j);
      }
    }
  }
  if (e.strings.size() < 2) r.constant_one_nto = false;
  r.rank = symplectic_rank(e.strings);
  r.full_rank = r.count_ok && r.rank == 2 * static_cast<std::size_t>(e.n_modes);
  return r;
}

VacuumReport check_vacuum(const Encoding& e) {
  VacuumReport r;
  if (e.strings.size() != 2 * static_cast<std::size_t>(e.n_modes)) {
    r.first_bad_mode = 0;
    return r;
  }
  for (std::uint32_t m = 0; m < e.n_modes; ++m) {
    auto [phase, prod] = multiply(e.strings[2 * m], e.strings[2 * m + 1]);
    // i * i^p * D acts on |0...0> as i^(p+1) when D is diagonal.
    if (!prod.is_diagonal() || prod.is_identity() || phase != kPhaseI) {
      r.first_bad_mode = m;
      return r;
    }
  }
  r.preserving = true;
  return r;
}

std::vector<std::vector<std::uint32_t>> nto_matrix(const Encoding& e) {
  const auto n = static_cast<std::int64_t>(e.strings.size());
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n, 0));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      if (i != j) out[i][j] = static_cast<std::uint32_t>(nto(e.strings[i], e.strings[j]));
    }
  }
  return out;
}

Encoding build_maxnto(std::uint32_t n_modes) {
  if (n_modes < 2) throw ArgumentError("MaxNTO needs at least two modes");
  if (n_modes > 64) throw ArgumentError("MaxNTO construction is guarded to 64 modes");
  std::vector<std::string> strings = {"X", "Y"};
  for (std::uint32_t k = 1; k < n_modes; ++k) {
    const bool last = k + 1 == n_modes;
    const bool use_x = k % 2 == 0 && !(last && n_modes % 2 == 1);
    const std::string ref(k, use_x ? 'X' : 'I');
    const auto ref_str = PauliString::parse(ref);
    for (auto& s : strings) {
      s.push_back(anticommutes(PauliString::parse(s), ref_str) ? 'I' : 'Z');
    }
    strings.push_back(ref + "X");
    strings.push_back(ref + "Y");
  }
  Encoding e;
  e.n_modes = n_modes;
  for (const auto& s : strings) e.strings.push_back(PauliString::parse(s));
  if (!validate(e).valid()) throw StructureError("MaxNTO construction failed");
  return e;
}

}  // namespace ferrtree
