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

#include <cstdint>
#include <string>
#include <vector>

#include "ferrtree/majorana.hpp"

namespace ferrtree {

/// Default target precision of the sampled channel.
inline constexpr double kDefaultEpsilon = 1e-3;

struct Gate {
  enum class Kind : std::uint8_t { BasisChange, Entangler, Rotation };

  Kind kind = Kind::Rotation;
  std::uint32_t qubit = 0;   // target (or the rotated / basis-changed qubit)
  std::uint32_t control = 0; // Entangler only
  Pauli basis = Pauli::Z;    // BasisChange only: X or Y
  double angle = 0.0;        // Rotation only

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::uint32_t n_qubits = 0;
  std::vector<Gate> gates;
};

/// ceil(2 lambda^2 t^2 / epsilon), evaluated exactly on the binary values of
/// the inputs. Throws ArgumentError for epsilon <= 0, negative or
/// non-finite inputs, or a result beyond 2^63.
std::uint64_t sample_count(double lambda, double t, double epsilon);

/// Basis changes, entangler ladder onto the last support qubit, rotation,
/// and the mirror image. Identity strings lower to nothing.
void append_exponential(Circuit& c, const PauliString& s, double angle);

/// One qDRIFT circuit; the identity term is excluded from sampling. Throws
/// ArgumentError when no non-identity term remains or epsilon <= 0.
Circuit sample_circuit(const QubitHamiltonian& h, double t, double epsilon, std::uint64_t seed);

/// ASAP-layered depth; every gate takes one step on each qubit it touches.
std::uint64_t circuit_depth(const Circuit& c);

struct DepthStats {
  std::uint64_t n_circuits = 0;
  std::uint64_t n_samples = 0;  // N_s per circuit
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

/// Seed of circuit `index` in a batch seeded with `seed`.
std::uint64_t circuit_seed(std::uint64_t seed, std::uint64_t index);

/// Depth statistics over n circuits with derived per-circuit seeds; the
/// result does not depend on the thread count.
DepthStats depth_stats(const QubitHamiltonian& h, double t, double epsilon,
                       std::uint64_t n_circuits, std::uint64_t seed);
DepthStats depth_stats_serial(const QubitHamiltonian& h, double t, double epsilon,
                              std::uint64_t n_circuits, std::uint64_t seed);

/// One gate per line: "basis <q> <X|Y>", "cx <control> <target>",
/// "rz <q> <angle>".
std::string format_circuit(const Circuit& c);

}  // namespace ferrtree
