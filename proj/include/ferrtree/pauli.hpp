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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ferrtree {

/// Single-qubit Pauli operator. Bit 0 is the X component, bit 1 the Z
/// component, so Y = X|Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);

/// Exact global phase i^power.
struct Phase {
  std::uint8_t power = 0;

  constexpr Phase operator*(Phase other) const {
    return Phase{static_cast<std::uint8_t>((power + other.power) & 3u)};
  }
  constexpr bool operator==(const Phase&) const = default;

  std::complex<double> value() const;
};

inline constexpr Phase kPhaseOne{0};
inline constexpr Phase kPhaseI{1};
inline constexpr Phase kPhaseMinusOne{2};
inline constexpr Phase kPhaseMinusI{3};

/// Pauli word over n qubits in symplectic (x, z) bit-pair form.
///
/// Textual form is one upper-case letter per qubit with qubit 0 leftmost.
/// Values are immutable in spirit: the only mutators are `set` and the
/// in-place product used by hot loops.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  /// Parses "XIZY"-style text; throws InputError on other characters.
  static PauliString parse(std::string_view text);

  std::size_t size() const { return n_qubits_; }
  Pauli at(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  bool is_identity() const;
  /// True if the string contains only I and Z.
  bool is_diagonal() const;

  /// this <- this * rhs, returning the phase of the product.
  Phase multiply_in_place(const PauliString& rhs);
  /// Masks-only XOR; used where the phase is irrelevant (weights).
  void xor_in_place(const PauliString& rhs);

  std::string str() const;

  bool operator==(const PauliString& other) const = default;
  bool operator<(const PauliString& other) const;

  std::size_t hash() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// a * b with exact phase. Throws DimensionError on length mismatch.
std::pair<Phase, PauliString> multiply(const PauliString& a, const PauliString& b);

/// Number of qubits where both strings are non-identity and differ.
std::size_t nto(const PauliString& a, const PauliString& b);

bool anticommutes(const PauliString& a, const PauliString& b);

/// Number of non-identity positions.
std::size_t weight(const PauliString& s);

}  // namespace ferrtree

template <>
struct std::hash<ferrtree::PauliString> {
  std::size_t operator()(const ferrtree::PauliString& s) const noexcept { return s.hash(); }
};
