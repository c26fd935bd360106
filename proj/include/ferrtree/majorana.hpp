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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ferrtree/pauli.hpp"

namespace ferrtree {

using Complex = std::complex<double>;

/// Terms whose merged coefficient magnitude falls at or below this are dropped.
inline constexpr double kCoefficientThreshold = 1e-12;

struct OneBodyTerm {
  std::uint32_t p = 0, q = 0;
  double value = 0.0;
};

/// Coefficient of a+_p a+_q a_r a_s (physicist operator ordering).
struct TwoBodyTerm {
  std::uint32_t p = 0, q = 0, r = 0, s = 0;
  double value = 0.0;
};

/// Second-quantized Hamiltonian as stored in `fermionic-1` files.
struct FermionicHamiltonian {
  std::uint32_t n_modes = 0;
  std::string convention = "physicist";
  double constant = 0.0;
  std::vector<OneBodyTerm> one_body;
  std::vector<TwoBodyTerm> two_body;

  /// Number of integral entries, the |H| reported for molecular fixtures.
  std::size_t term_count() const { return one_body.size() + two_body.size(); }
};

/// coefficient * gamma_{support[0]} ... gamma_{support[k-1]}, support strictly
/// increasing.
struct MajoranaTerm {
  Complex coefficient;
  std::vector<std::uint32_t> support;

  bool operator==(const MajoranaTerm&) const = default;
};

/// Reorders `indices` into strictly increasing order, cancelling repeated
/// pairs (gamma^2 = 1). Returns the sign (+1/-1) picked up by the
/// anticommuting swaps.
int canonicalize_product(std::vector<std::uint32_t>& indices);

/// Sum of Majorana monomials over 2M operators; at most one term per support.
class MajoranaHamiltonian {
 public:
  MajoranaHamiltonian() = default;
  explicit MajoranaHamiltonian(std::uint32_t n_modes) : n_modes_(n_modes) {}

  /// Canonicalizes every support, merges like terms and drops sub-threshold
  /// coefficients. Throws InputError (with the term position) on an index
  /// >= 2M or a non-finite coefficient.
  static MajoranaHamiltonian from_terms(std::uint32_t n_modes, std::vector<MajoranaTerm> raw);

  std::uint32_t n_modes() const { return n_modes_; }
  std::span<const MajoranaTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  bool operator==(const MajoranaHamiltonian&) const = default;

 private:
  std::uint32_t n_modes_ = 0;
  std::vector<MajoranaTerm> terms_;  // sorted by (support length, support)
};

/// Expands a+ / a in Majorana operators, a_j = (g_2j + i g_2j+1)/2.
MajoranaHamiltonian from_fermionic(const FermionicHamiltonian& h);

struct QubitTerm {
  Complex coefficient;
  PauliString string;
};

struct QubitHamiltonian {
  std::uint32_t n_qubits = 0;
  std::vector<QubitTerm> terms;

  /// Largest |Im(c)| over all terms.
  double max_imaginary() const;
};

/// Replaces each Majorana monomial by the phase-tracked product of its
/// strings. `strings[j]` encodes gamma_j. Like strings are merged in order of
/// first appearance. The OpenMP variant parallelizes the per-term products.
QubitHamiltonian encode(const MajoranaHamiltonian& h, std::span<const PauliString> strings);
QubitHamiltonian encode_serial(const MajoranaHamiltonian& h,
                               std::span<const PauliString> strings);

/// Sum of |c| over non-identity terms.
double lambda_norm(const QubitHamiltonian& h);

struct WeightMetrics {
  std::size_t n_terms = 0;
  std::size_t wp_total = 0;
  double wcp_total = 0.0;
  double avg_wp = 0.0;
  double avg_wcp = 0.0;
};

/// Pauli weight and coefficient-scaled Pauli weight. Averages divide by the
/// number of counted terms; the identity term is counted only when asked.
WeightMetrics weight_metrics(const QubitHamiltonian& h, bool include_identity = false);

}  // namespace ferrtree
