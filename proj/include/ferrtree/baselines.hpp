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
#include <optional>
#include <random>
#include <vector>

#include "ferrtree/encoding.hpp"
#include "ferrtree/majorana.hpp"
#include "ferrtree/tree.hpp"

namespace ferrtree {

/// Total Pauli weight of `h` under a mode relabelling of a fixed encoding,
/// without building the qubit Hamiltonian. Supports map to distinct strings
/// for any valid encoding, so this equals the W_P of encode().
class EnumerationCost {
 public:
  EnumerationCost(const MajoranaHamiltonian& h, Encoding base);

  std::uint32_t n_modes() const { return base_.n_modes; }
  /// `mode_of_pair` as in EnumerationScheme.
  std::uint64_t operator()(const std::vector<std::uint32_t>& mode_of_pair) const;

 private:
  Encoding base_;
  std::vector<std::vector<std::uint32_t>> supports_;
};

/// Uniform integer in [0, bound) by rejection on 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);
/// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::uint32_t> random_permutation(std::mt19937_64& rng, std::uint32_t n);

struct ScatterSample {
  std::uint64_t sample_id = 0;
  double avg_wp = 0.0;
  double avg_wcp = 0.0;
};

/// n random mode relabellings of a naive tree, sample i seeded with seed ^ i.
/// Output is independent of the thread count.
std::vector<ScatterSample> random_scatter(const TernaryTree& naive, const MajoranaHamiltonian& h,
                                          std::uint64_t n, std::uint64_t seed);
std::vector<ScatterSample> random_scatter_serial(const TernaryTree& naive,
                                                 const MajoranaHamiltonian& h, std::uint64_t n,
                                                 std::uint64_t seed);

struct AnnealingParams {
  /// Default: standard deviation of 50 random pair-swap cost deltas.
  std::optional<double> initial_temperature;
  double cooling = 0.995;
  /// Default: 200 * M.
  std::optional<std::uint64_t> steps;
  std::uint64_t seed = 0;
};

struct AnnealingResult {
  EnumerationScheme scheme;
  std::uint64_t initial_cost = 0;
  std::uint64_t best_cost = 0;
  /// Best-seen cost after each step.
  std::vector<std::uint64_t> best_history;
};

/// Metropolis walk over swaps of two modes' string pairs. Throws
/// ArgumentError on a non-positive temperature, cooling outside (0, 1) or
/// zero steps.
AnnealingResult simulated_annealing(const TernaryTree& naive, const MajoranaHamiltonian& h,
                                    const AnnealingParams& params = {});

struct BruteForceResult {
  EnumerationScheme scheme;
  std::uint64_t min_cost = 0;
};

inline constexpr std::uint32_t kBruteForceMaxModes = 7;

/// Exhaustive scan of all M! mode relabellings; the first minimum in
/// lexicographic permutation order wins. Throws ArgumentError for M > 7.
BruteForceResult brute_force(const TernaryTree& naive, const MajoranaHamiltonian& h);

}  // namespace ferrtree
