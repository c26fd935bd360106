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

#include "ferrtree/pauli.hpp"

#include <algorithm>
#include <bit>

#include "ferrtree/error.hpp"

namespace ferrtree {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void check_sizes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw DimensionError("Pauli string length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

// Phase power contributed by the positionwise product of two words.
// +i for XY, YZ, ZX; -i for YX, ZY, XZ.
unsigned phase_power(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2, std::uint64_t z2) {
  const std::uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
  const std::uint64_t minus = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
  return static_cast<unsigned>(std::popcount(plus) + 3 * std::popcount(minus));
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::complex<double> Phase::value() const {
  switch (power & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits), x_(word_count(n_qubits), 0), z_(word_count(n_qubits), 0) {}

PauliString PauliString::parse(std::string_view text) {
  PauliString s(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': s.set(q, Pauli::X); break;
      case 'Y': s.set(q, Pauli::Y); break;
      case 'Z': s.set(q, Pauli::Z); break;
      default:
        throw InputError("invalid Pauli character '" + std::string(1, text[q]) +
                         "' at position " + std::to_string(q));
    }
  }
  return s;
}

Pauli PauliString::at(std::size_t qubit) const {
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  const std::size_t w = qubit / kWordBits;
  const unsigned x = (x_[w] & bit) ? 1u : 0u;
  const unsigned z = (z_[w] & bit) ? 2u : 0u;
  return static_cast<Pauli>(x | z);
}

void PauliString::set(std::size_t qubit, Pauli p) {
  if (qubit >= n_qubits_) {
    throw DimensionError("qubit " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n_qubits_) + "-qubit string");
  }
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  const std::size_t w = qubit / kWordBits;
  const auto v = static_cast<unsigned>(p);
  x_[w] = (v & 1u) ? (x_[w] | bit) : (x_[w] & ~bit);
  z_[w] = (v & 2u) ? (z_[w] | bit) : (z_[w] & ~bit);
}

bool PauliString::is_identity() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

bool PauliString::is_diagonal() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; });
}

Phase PauliString::multiply_in_place(const PauliString& rhs) {
  check_sizes(*this, rhs);
  unsigned power = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    power += phase_power(x_[w], z_[w], rhs.x_[w], rhs.z_[w]);
    x_[w] ^= rhs.x_[w];
    z_[w] ^= rhs.z_[w];
  }
  return Phase{static_cast<std::uint8_t>(power & 3u)};
}

void PauliString::xor_in_place(const PauliString& rhs) {
  check_sizes(*this, rhs);
  for (std::size_t w = 0; w < x_.size(); ++w) {
    x_[w] ^= rhs.x_[w];
    z_[w] ^= rhs.z_[w];
  }
}

std::string PauliString::str() const {
  std::string out(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) out[q] = to_char(at(q));
  return out;
}

bool PauliString::operator<(const PauliString& other) const {
  if (n_qubits_ != other.n_qubits_) return n_qubits_ < other.n_qubits_;
  if (x_ != other.x_) return x_ < other.x_;
  return z_ < other.z_;
}

std::size_t PauliString::hash() const {
  std::size_t h = std::hash<std::size_t>{}(n_qubits_);
  auto mix = [&h](std::uint64_t v) {
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto w : x_) mix(w);
  for (auto w : z_) mix(w);
  return h;
}

std::pair<Phase, PauliString> multiply(const PauliString& a, const PauliString& b) {
  PauliString out = a;
  const Phase phase = out.multiply_in_place(b);
  return {phase, std::move(out)};
}

std::size_t nto(const PauliString& a, const PauliString& b) {
  check_sizes(a, b);
  const auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
  std::size_t count = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    const std::uint64_t both = (ax[w] | az[w]) & (bx[w] | bz[w]);
    const std::uint64_t differ = (ax[w] ^ bx[w]) | (az[w] ^ bz[w]);
    count += static_cast<std::size_t>(std::popcount(both & differ));
  }
  return count;
}

bool anticommutes(const PauliString& a, const PauliString& b) { return (nto(a, b) & 1u) != 0; }

std::size_t weight(const PauliString& s) {
  const auto xs = s.x_words(), zs = s.z_words();
  std::size_t count = 0;
  for (std::size_t w = 0; w < xs.size(); ++w) {
    count += static_cast<std::size_t>(std::popcount(xs[w] | zs[w]));
  }
  return count;
}

}  // namespace ferrtree
