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

// JSON file formats. Parsers throw InputError naming the offending element;
// tree and device content is re-validated (StructureError).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ferrtree/encoding.hpp"
#include "ferrtree/majorana.hpp"
#include "ferrtree/tree.hpp"

namespace ferrtree {

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// majorana-1
MajoranaHamiltonian parse_majorana(std::string_view text);
std::string dump_majorana(const MajoranaHamiltonian& h);

// fermionic-1
FermionicHamiltonian parse_fermionic(std::string_view text);
std::string dump_fermionic(const FermionicHamiltonian& h);

/// Either Hamiltonian format, told apart by its "format" field.
struct LoadedHamiltonian {
  MajoranaHamiltonian majorana;
  std::optional<FermionicHamiltonian> fermionic;

  /// Fermionic integral count when available, else the Majorana term count.
  std::size_t term_count() const {
    return fermionic ? fermionic->term_count() : majorana.size();
  }
};
LoadedHamiltonian parse_hamiltonian(std::string_view text);
LoadedHamiltonian load_hamiltonian(const std::filesystem::path& path);

// ttree-1
TernaryTree parse_tree(std::string_view text);
std::string dump_tree(const TernaryTree& t);
TernaryTree load_tree(const std::filesystem::path& path);

// device-1
DeviceGraph parse_device(std::string_view text);
std::string dump_device(const DeviceGraph& g);
DeviceGraph load_device(const std::filesystem::path& path);

// encoding-1
Encoding parse_encoding(std::string_view text);
std::string dump_encoding(const Encoding& e);
Encoding load_encoding(const std::filesystem::path& path);

// qubit-1 (write only)
std::string dump_qubit_hamiltonian(const QubitHamiltonian& h);

std::string dump_validity(const ValidityReport& r, const VacuumReport& v);

}  // namespace ferrtree
