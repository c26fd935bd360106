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

#include "ferrtree/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ferrtree/error.hpp"
#include "json.hpp"

namespace ferrtree {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void expect_format(const json& j, std::string_view format) {
  if (!j.is_object() || !j.contains("format") || j["format"] != format) {
    throw InputError("expected a \"" + std::string(format) + "\" document");
  }
}

template <class T>
T get_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + ": bad field \"" + key + "\": " + e.what());
  }
}

template <class T>
T get_value(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::uint32_t get_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError(where + ": expected a non-negative integer index");
  }
  return j.get<std::uint32_t>();
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("write failed for " + path.string());
}

MajoranaHamiltonian parse_majorana(std::string_view text) {
  const json j = parse_json(text);
  expect_format(j, "majorana-1");
  const auto m = get_field<std::uint32_t>(j, "n_modes", "majorana-1");
  if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("majorana-1: missing terms");
  std::vector<MajoranaTerm> raw;
  raw.reserve(j["terms"].size());
  std::size_t pos = 0;
  for (const auto& t : j["terms"]) {
    const std::string where = "term " + std::to_string(pos++);
    MajoranaTerm term;
    if (!t.contains("support") || !t["support"].is_array()) {
      throw InputError(where + ": missing support");
    }
    for (const auto& s : t["support"]) term.support.push_back(get_index(s, where));
    const double re = t.contains("re") ? get_field<double>(t, "re", where) : 0.0;
    const double im = t.contains("im") ? get_field<double>(t, "im", where) : 0.0;
    term.coefficient = {re, im};
    raw.push_back(std::move(term));
  }
  return MajoranaHamiltonian::from_terms(m, std::move(raw));
}

std::string dump_majorana(const MajoranaHamiltonian& h) {
  json terms = json::array();
  for (const auto& t : h.terms()) {
    terms.push_back({{"support", t.support}, {"re", t.coefficient.real()}, {"im", t.coefficient.imag()}});
  }
  return dump({{"format", "majorana-1"}, {"n_modes", h.n_modes()}, {"terms", terms}});
}

FermionicHamiltonian parse_fermionic(std::string_view text) {
  const json j = parse_json(text);
  expect_format(j, "fermionic-1");
  FermionicHamiltonian h;
  h.n_modes = get_field<std::uint32_t>(j, "n_modes", "fermionic-1");
  h.convention = j.contains("convention") ? get_field<std::string>(j, "convention", "fermionic-1")
                                          : "physicist";
  if (h.convention != "physicist") {
    throw InputError("fermionic-1: unsupported convention \"" + h.convention + "\"");
  }
  h.constant = j.contains("constant") ? get_field<double>(j, "constant", "fermionic-1") : 0.0;
  auto mode = [&](const json& v, const std::string& where) {
    const std::uint32_t m = get_index(v, where);
    if (m >= h.n_modes) {
      throw InputError(where + ": mode index " + std::to_string(m) + " out of range for " +
                       std::to_string(h.n_modes) + " modes");
    }
    return m;
  };
  auto finite = [](double v, const std::string& where) {
    if (!std::isfinite(v)) throw InputError(where + ": non-finite value");
    return v;
  };
  if (j.contains("one_body")) {
    std::size_t pos = 0;
    for (const auto& row : j["one_body"]) {
      const std::string where = "one-body term " + std::to_string(pos++);
      if (!row.is_array() || row.size() != 3) throw InputError(where + ": expected [p,q,v]");
      h.one_body.push_back(
          {mode(row[0], where), mode(row[1], where), finite(get_value<double>(row[2], where), where)});
    }
  }
  if (j.contains("two_body")) {
    std::size_t pos = 0;
    for (const auto& row : j["two_body"]) {
      const std::string where = "two-body term " + std::to_string(pos++);
      if (!row.is_array() || row.size() != 5) throw InputError(where + ": expected [p,q,r,s,v]");
      h.two_body.push_back({mode(row[0], where), mode(row[1], where), mode(row[2], where),
                            mode(row[3], where), finite(get_value<double>(row[4], where), where)});
    }
  }
  return h;
}

std::string dump_fermionic(const FermionicHamiltonian& h) {
  json one = json::array(), two = json::array();
  for (const auto& t : h.one_body) one.push_back({t.p, t.q, t.value});
  for (const auto& t : h.two_body) two.push_back({t.p, t.q, t.r, t.s, t.value});
  return dump({{"format", "fermionic-1"},
               {"n_modes", h.n_modes},
               {"convention", h.convention},
               {"constant", h.constant},
               {"one_body", one},
               {"two_body", two}});
}

LoadedHamiltonian parse_hamiltonian(std::string_view text) {
  const json j = parse_json(text);
  const std::string format = j.is_object() && j.contains("format") && j["format"].is_string()
                                 ? j["format"].get<std::string>()
                                 : "";
  LoadedHamiltonian out;
  if (format == "majorana-1") {
    out.majorana = parse_majorana(text);
  } else if (format == "fermionic-1") {
    out.fermionic = parse_fermionic(text);
    out.majorana = from_fermionic(*out.fermionic);
  } else {
    throw InputError("unknown Hamiltonian format \"" + format + "\"");
  }
  return out;
}

LoadedHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  return parse_hamiltonian(read_text_file(path));
}

namespace {

Slot parse_slot(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j == "allz") return Slot::make_all_z();
    throw InputError(where + ": unknown slot \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) throw InputError(where + ": expected a slot object");
  if (j.contains("child")) return Slot::make_child(get_index(j["child"], where));
  if (j.contains("leaf")) {
    if (j["leaf"].is_null()) return Slot::make_leaf();
    return Slot::make_leaf(get_index(j["leaf"], where));
  }
  throw InputError(where + ": slot needs \"child\", \"leaf\" or \"allz\"");
}

json slot_json(const Slot& s) {
  switch (s.kind) {
    case Slot::Kind::Child: return {{"child", s.child}};
    case Slot::Kind::AllZ: return "allz";
    case Slot::Kind::Leaf:
      return s.majorana ? json{{"leaf", *s.majorana}} : json{{"leaf", nullptr}};
  }
  return nullptr;
}

}  // namespace

TernaryTree parse_tree(std::string_view text) {
  const json j = parse_json(text);
  expect_format(j, "ttree-1");
  const auto m = get_field<std::uint32_t>(j, "n_modes", "ttree-1");
  const auto root = get_field<std::uint32_t>(j, "root", "ttree-1");
  if (!j.contains("nodes") || !j["nodes"].is_array()) throw InputError("ttree-1: missing nodes");
  if (j["nodes"].size() != m) {
    throw StructureError("ttree-1: " + std::to_string(j["nodes"].size()) + " nodes for " +
                         std::to_string(m) + " modes");
  }
  std::vector<TreeNode> nodes;
  std::size_t pos = 0;
  for (const auto& n : j["nodes"]) {
    const std::string where = "node " + std::to_string(pos++);
    TreeNode node;
    node.id = get_index(n.value("id", json()), where);
    node.qubit = get_index(n.value("qubit", json()), where);
    for (Axis a : kAxes) {
      const char key[2] = {static_cast<char>(std::tolower(to_char(a))), '\0'};
      if (!n.contains(key)) throw InputError(where + ": missing slot \"" + key + "\"");
      node.edge(a) = parse_slot(n[key], where + " slot " + key);
    }
    nodes.push_back(node);
  }
  TernaryTree t(root, std::move(nodes));
  if (j.contains("device_qubits")) {
    t.set_device_qubits(get_field<std::vector<std::uint32_t>>(j, "device_qubits", "ttree-1"));
  }
  return t;
}

std::string dump_tree(const TernaryTree& t) {
  json nodes = json::array();
  for (const auto& n : t.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"qubit", n.qubit},
                     {"x", slot_json(n.edge(Axis::X))},
                     {"y", slot_json(n.edge(Axis::Y))},
                     {"z", slot_json(n.edge(Axis::Z))}});
  }
  json j = {{"format", "ttree-1"}, {"n_modes", t.n_modes()}, {"root", t.root()}, {"nodes", nodes}};
  if (!t.device_qubits().empty()) {
    j["device_qubits"] = std::vector<std::uint32_t>(t.device_qubits().begin(), t.device_qubits().end());
  }
  return dump(j);
}

TernaryTree load_tree(const std::filesystem::path& path) { return parse_tree(read_text_file(path)); }

DeviceGraph parse_device(std::string_view text) {
  const json j = parse_json(text);
  expect_format(j, "device-1");
  DeviceGraph g;
  g.n_qubits = get_field<std::uint32_t>(j, "n_qubits", "device-1");
  if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("device-1: missing edges");
  std::size_t pos = 0;
  for (const auto& e : j["edges"]) {
    const std::string where = "edge " + std::to_string(pos++);
    if (!e.is_array() || e.size() != 2) throw InputError(where + ": expected [a,b]");
    g.edges.emplace_back(get_index(e[0], where), get_index(e[1], where));
  }
  g.check();
  return g;
}

std::string dump_device(const DeviceGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return dump({{"format", "device-1"}, {"n_qubits", g.n_qubits}, {"edges", edges}});
}

DeviceGraph load_device(const std::filesystem::path& path) {
  return parse_device(read_text_file(path));
}

Encoding parse_encoding(std::string_view text) {
  const json j = parse_json(text);
  expect_format(j, "encoding-1");
  Encoding e;
  e.n_modes = get_field<std::uint32_t>(j, "n_modes", "encoding-1");
  for (const auto& s : get_field<std::vector<std::string>>(j, "strings", "encoding-1")) {
    e.strings.push_back(PauliString::parse(s));
  }
  return e;
}

std::string dump_encoding(const Encoding& e) {
  json strings = json::array();
  for (const auto& s : e.strings) strings.push_back(s.str());
  return dump({{"format", "encoding-1"}, {"n_modes", e.n_modes}, {"strings", strings}});
}

Encoding load_encoding(const std::filesystem::path& path) {
  return parse_encoding(read_text_file(path));
}

std::string dump_qubit_hamiltonian(const QubitHamiltonian& h) {
  json terms = json::array();
  for (const auto& t : h.terms) {
    terms.push_back({{"string", t.string.str()}, {"re", t.coefficient.real()}, {"im", t.coefficient.imag()}});
  }
  return dump({{"format", "qubit-1"}, {"n_qubits", h.n_qubits}, {"terms", terms}});
}

std::string dump_validity(const ValidityReport& r, const VacuumReport& v) {
  json j = {{"valid", r.valid()},
            {"n_strings", r.n_strings},
            {"count_ok", r.count_ok},
            {"lengths_ok", r.lengths_ok},
            {"anticommuting", r.anticommuting},
            {"rank", r.rank},
            {"full_rank", r.full_rank},
            {"constant_one_nto", r.constant_one_nto},
            {"max_nto", r.max_nto},
            {"vacuum_preserving", v.preserving}};
  if (r.commuting_pair) j["commuting_pair"] = {r.commuting_pair->first, r.commuting_pair->second};
  if (v.first_bad_mode) j["vacuum_bad_mode"] = *v.first_bad_mode;
  return dump(j);
}

}  // namespace ferrtree
