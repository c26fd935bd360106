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

#include "ferrtree/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ferrtree/error.hpp"

namespace ferrtree {

EnumerationCost::EnumerationCost(const MajoranaHamiltonian& h, Encoding base)
    : base_(std::move(base)) {
  if (base_.n_modes != h.n_modes() || base_.strings.size() != 2 * std::size_t{h.n_modes()}) {
    throw DimensionError("encoding and Hamiltonian sizes differ");
  }
  for (const auto& t : h.terms()) {
    if (!t.support.empty()) supports_.push_back(t.support);
  }
}

std::uint64_t EnumerationCost::operator()(const std::vector<std::uint32_t>& mode_of_pair) const {
  // gamma_j of the relabelled encoding is base string (2k + b) with
  // j = 2 * mode_of_pair[k] + b; invert once.
  std::vector<std::uint32_t> source(2 * mode_of_pair.size());
  for (std::uint32_t k = 0; k < mode_of_pair.size(); ++k) {
    source[2 * mode_of_pair[k]] = 2 * k;
    source[2 * mode_of_pair[k] + 1] = 2 * k + 1;
  }
  std::uint64_t total = 0;
  PauliString acc(base_.n_modes);
  const PauliString zero(base_.n_modes);
  for (const auto& s : supports_) {
    acc = zero;
    for (auto j : s) acc.xor_in_place(base_.strings[source[j]]);
    total += weight(acc);
  }
  return total;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::uint32_t> random_permutation(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i) {
    std::swap(p[i - 1], p[uniform_below(rng, i)]);
  }
  return p;
}

namespace {

ScatterSample scatter_one(const Encoding& base, const MajoranaHamiltonian& h, std::uint64_t id,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ id);
  EnumerationScheme s;
  s.mode_of_pair = random_permutation(rng, base.n_modes);
  const auto metrics = weight_metrics(encode_serial(h, apply_enumeration(base, s).strings));
  return {id, metrics.avg_wp, metrics.avg_wcp};
}

}  // namespace

std::vector<ScatterSample> random_scatter(const TernaryTree& naive, const MajoranaHamiltonian& h,
                                          std::uint64_t n, std::uint64_t seed) {
  const Encoding base = strings_from_tree(naive);
  std::vector<ScatterSample> out(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[i] = scatter_one(base, h, static_cast<std::uint64_t>(i), seed);
  }
  return out;
}

std::vector<ScatterSample> random_scatter_serial(const TernaryTree& naive,
                                                 const MajoranaHamiltonian& h, std::uint64_t n,
                                                 std::uint64_t seed) {
  const Encoding base = strings_from_tree(naive);
  std::vector<ScatterSample> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(scatter_one(base, h, i, seed));
  return out;
}

AnnealingResult simulated_annealing(const TernaryTree& naive, const MajoranaHamiltonian& h,
                                    const AnnealingParams& params) {
  if (params.initial_temperature && !(*params.initial_temperature > 0.0)) {
    throw ArgumentError("initial temperature must be positive");
  }
  if (!(params.cooling > 0.0 && params.cooling < 1.0)) {
    throw ArgumentError("cooling factor must lie in (0, 1)");
  }
  if (params.steps && *params.steps == 0) throw ArgumentError("annealing needs at least one step");

  const auto m = naive.n_modes();
  const EnumerationCost cost(h, strings_from_tree(naive));
  std::mt19937_64 rng(params.seed);
  std::vector<std::uint32_t> current(m);
  std::iota(current.begin(), current.end(), 0u);
  std::uint64_t current_cost = cost(current);

  AnnealingResult out;
  out.initial_cost = current_cost;
  out.best_cost = current_cost;
  out.scheme = EnumerationScheme::identity(m);
  if (m < 2) return out;

  auto random_swap = [&](std::vector<std::uint32_t>& p) {
    const auto a = uniform_below(rng, m);
    auto b = uniform_below(rng, m - 1);
    if (b >= a) ++b;
    std::swap(p[a], p[b]);
  };

  double temperature = 0.0;
  if (params.initial_temperature) {
    temperature = *params.initial_temperature;
  } else {
    std::vector<double> deltas;
    for (int i = 0; i < 50; ++i) {
      auto p = current;
      random_swap(p);
      deltas.push_back(static_cast<double>(cost(p)) - static_cast<double>(current_cost));
    }
    const double mean = std::accumulate(deltas.begin(), deltas.end(), 0.0) / deltas.size();
    double var = 0.0;
    for (double d : deltas) var += (d - mean) * (d - mean);
    temperature = std::sqrt(var / deltas.size());
    if (!(temperature > 0.0)) temperature = 1.0;
  }

  const std::uint64_t steps = params.steps.value_or(200ull * m);
  std::vector<std::uint32_t> best = current;
  out.best_history.reserve(steps);
  for (std::uint64_t step = 0; step < steps; ++step) {
    auto candidate = current;
    random_swap(candidate);
    const auto c = cost(candidate);
    const double delta = static_cast<double>(c) - static_cast<double>(current_cost);
    const double u = uniform_unit(rng);
    if (delta <= 0.0 || u < std::exp(-delta / temperature)) {
      current = std::move(candidate);
      current_cost = c;
      if (current_cost < out.best_cost) {
        out.best_cost = current_cost;
        best = current;
      }
    }
    out.best_history.push_back(out.best_cost);
    temperature *= params.cooling;
  }
  out.scheme.mode_of_pair = best;
  return out;
}

BruteForceResult brute_force(const TernaryTree& naive, const MajoranaHamiltonian& h) {
  const auto m = naive.n_modes();
  if (m > kBruteForceMaxModes) {
    throw ArgumentError("brute force is limited to " + std::to_string(kBruteForceMaxModes) +
                        " modes; got " + std::to_string(m));
  }
  const EnumerationCost cost(h, strings_from_tree(naive));
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  BruteForceResult out;
  out.scheme = EnumerationScheme::identity(m);
  out.min_cost = cost(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const auto c = cost(perm);
    if (c < out.min_cost) {
      out.min_cost = c;
      out.scheme.mode_of_pair = perm;
    }
  }
  return out;
}

}  // namespace ferrtree
