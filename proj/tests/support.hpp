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

// Shared helpers for the unit and acceptance tests: dense-matrix oracles,
// fixture paths and seeded random Hamiltonians.

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ferrtree/encoding.hpp"
#include "ferrtree/majorana.hpp"
#include "ferrtree/pauli.hpp"

namespace ferrtree::testing {

/// Kronecker product with qubit 0 as the most significant factor.
Eigen::MatrixXcd dense(const PauliString& s);
Eigen::MatrixXcd dense(const QubitHamiltonian& h);

/// Annihilation operator of `mode` in the occupation basis |n_0 ... n_{M-1}>,
/// built directly from the anticommutation sign rule.
Eigen::MatrixXcd annihilation(std::uint32_t mode, std::uint32_t n_modes);
Eigen::MatrixXcd dense(const FermionicHamiltonian& h);

std::vector<PauliString> strings(std::initializer_list<const char*> text);
Encoding encoding(std::uint32_t n_modes, std::initializer_list<const char*> text);

/// The four-mode Jordan-Wigner set, in Majorana order.
Encoding jw4();

std::filesystem::path data_path(const std::string& name);

/// Pauli weight of `h` under the encoding given by `t`'s leaves.
std::uint64_t pauli_weight(const MajoranaHamiltonian& h, const TernaryTree& t);

/// Seeded random Hamiltonian of 2- and 4-index Majorana monomials with
/// Hermitian phases (i*c for pairs, c for quartets).
MajoranaHamiltonian random_majorana(std::uint32_t n_modes, std::uint64_t seed);

/// Random Hermitian fermionic Hamiltonian with real symmetric integrals.
FermionicHamiltonian random_fermionic(std::uint32_t n_modes, std::uint64_t seed);

}  // namespace ferrtree::testing
