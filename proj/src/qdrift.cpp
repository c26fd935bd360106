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

#include "ferrtree/qdrift.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "ferrtree/baselines.hpp"
#include "ferrtree/error.hpp"

namespace ferrtree {

namespace {

using boost::multiprecision::cpp_int;

// value = mantissa * 2^exponent with an integer mantissa.
struct Dyadic {
  cpp_int mantissa;
  int exponent = 0;
};

Dyadic to_dyadic(double v) {
  int e = 0;
  const double frac = std::frexp(v, &e);
  const auto m = static_cast<std::int64_t>(std::ldexp(frac, 53));
  return {cpp_int(m), e - 53};
}

}  // namespace

std::uint64_t sample_count(double lambda, double t, double epsilon) {
  if (!std::isfinite(lambda) || !std::isfinite(t) || !std::isfinite(epsilon)) {
    throw ArgumentError("sample_count needs finite inputs");
  }
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  if (lambda < 0.0 || t < 0.0) throw ArgumentError("lambda and t must be non-negative");
  if (lambda == 0.0 || t == 0.0) return 0;

  const Dyadic l = to_dyadic(lambda), d = to_dyadic(t), e = to_dyadic(epsilon);
  cpp_int num = 2 * l.mantissa * l.mantissa * d.mantissa * d.mantissa;
  cpp_int den = e.mantissa;
  const int shift = 2 * l.exponent + 2 * d.exponent - e.exponent;
  if (shift >= 0) {
    num <<= shift;
  } else {
    den <<= -shift;
  }
  cpp_int q = num / den;
  if (q * den != num) ++q;
  if (q > cpp_int(std::numeric_limits<std::int64_t>::max())) {
    throw ArgumentError("sample count overflows");
  }
  return static_cast<std::uint64_t>(q);
}

void append_exponential(Circuit& c, const PauliString& s, double angle) {
  std::vector<std::uint32_t> support;
  for (std::uint32_t q = 0; q < s.size(); ++q) {
    if (s.at(q) != Pauli::I) support.push_back(q);
  }
  if (support.empty()) return;
  for (auto q : support) {
    const Pauli p = s.at(q);
    if (p != Pauli::Z) c.gates.push_back({Gate::Kind::BasisChange, q, 0, p, 0.0});
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) {
    c.gates.push_back({Gate::Kind::Entangler, support[k + 1], support[k], Pauli::Z, 0.0});
  }
  c.gates.push_back({Gate::Kind::Rotation, support.back(), 0, Pauli::Z, angle});
  for (std::size_t k = support.size() - 1; k > 0; --k) {
    c.gates.push_back({Gate::Kind::Entangler, support[k], support[k - 1], Pauli::Z, 0.0});
  }
  for (auto q : support) {
    const Pauli p = s.at(q);
    if (p != Pauli::Z) c.gates.push_back({Gate::Kind::BasisChange, q, 0, p, 0.0});
  }
}

namespace {

struct Sampler {
  std::vector<const QubitTerm*> terms;
  std::vector<double> cumulative;
  double lambda = 0.0;

  explicit Sampler(const QubitHamiltonian& h) {
    for (const auto& t : h.terms) {
      if (t.string.is_identity()) continue;
      terms.push_back(&t);
      lambda += std::abs(t.coefficient);
      cumulative.push_back(lambda);
    }
    if (terms.empty()) throw ArgumentError("qDRIFT needs at least one non-identity term");
  }

  const QubitTerm& draw(std::mt19937_64& rng) const {
    const double u = uniform_unit(rng) * lambda;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return *terms[static_cast<std::size_t>(it - cumulative.begin())];
  }
};

Circuit sample_with(const Sampler& s, std::uint32_t n_qubits, double t, std::uint64_t n_samples,
                    std::uint64_t seed) {
  Circuit c;
  c.n_qubits = n_qubits;
  std::mt19937_64 rng(seed);
  const double base_angle = 2.0 * s.lambda * t / static_cast<double>(n_samples);
  for (std::uint64_t k = 0; k < n_samples; ++k) {
    const QubitTerm& term = s.draw(rng);
    // Real part carries the sign; coefficients of Hermitian inputs are real.
    const double sign = term.coefficient.real() < 0.0 ? -1.0 : 1.0;
    append_exponential(c, term.string, sign * base_angle);
  }
  return c;
}

}  // namespace

Circuit sample_circuit(const QubitHamiltonian& h, double t, double epsilon, std::uint64_t seed) {
  const Sampler s(h);
  const auto n = sample_count(s.lambda, t, epsilon);
  return sample_with(s, h.n_qubits, t, n, seed);
}

std::uint64_t circuit_depth(const Circuit& c) {
  std::vector<std::uint64_t> ready(c.n_qubits, 0);
  std::uint64_t depth = 0;
  for (const auto& g : c.gates) {
    if (g.qubit >= c.n_qubits || (g.kind == Gate::Kind::Entangler && g.control >= c.n_qubits)) {
      throw DimensionError("gate qubit out of range");
    }
    std::uint64_t layer = ready[g.qubit] + 1;
    if (g.kind == Gate::Kind::Entangler) {
      layer = std::max(layer, ready[g.control] + 1);
      ready[g.control] = layer;
    }
    ready[g.qubit] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

std::uint64_t circuit_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the (seed, index) pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

DepthStats summarize(const std::vector<std::uint64_t>& depths, std::uint64_t n_samples) {
  DepthStats s;
  s.n_circuits = depths.size();
  s.n_samples = n_samples;
  if (depths.empty()) return s;
  double sum = 0.0;
  for (auto d : depths) sum += static_cast<double>(d);
  s.mean = sum / static_cast<double>(depths.size());
  double var = 0.0;
  for (auto d : depths) var += (static_cast<double>(d) - s.mean) * (static_cast<double>(d) - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(depths.size()));
  return s;
}

void check_batch(std::uint64_t n_circuits) {
  if (n_circuits == 0) throw ArgumentError("depth statistics need at least one circuit");
}

}  // namespace

DepthStats depth_stats(const QubitHamiltonian& h, double t, double epsilon,
                       std::uint64_t n_circuits, std::uint64_t seed) {
  check_batch(n_circuits);
  const Sampler s(h);
  const auto n_samples = sample_count(s.lambda, t, epsilon);
  std::vector<std::uint64_t> depths(n_circuits);
  const auto n = static_cast<std::int64_t>(n_circuits);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    depths[i] = circuit_depth(sample_with(s, h.n_qubits, t, n_samples, circuit_seed(seed, i)));
  }
  return summarize(depths, n_samples);
}

DepthStats depth_stats_serial(const QubitHamiltonian& h, double t, double epsilon,
                              std::uint64_t n_circuits, std::uint64_t seed) {
  check_batch(n_circuits);
  const Sampler s(h);
  const auto n_samples = sample_count(s.lambda, t, epsilon);
  std::vector<std::uint64_t> depths;
  depths.reserve(n_circuits);
  for (std::uint64_t i = 0; i < n_circuits; ++i) {
    depths.push_back(circuit_depth(sample_with(s, h.n_qubits, t, n_samples, circuit_seed(seed, i))));
  }
  return summarize(depths, n_samples);
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << '\n';
  char buf[64];
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::BasisChange:
        out << "basis " << g.qubit << ' ' << to_char(g.basis) << '\n';
        break;
      case Gate::Kind::Entangler:
        out << "cx " << g.control << ' ' << g.qubit << '\n';
        break;
      case Gate::Kind::Rotation:
        std::snprintf(buf, sizeof buf, "%.17g", g.angle);
        out << "rz " << g.qubit << ' ' << buf << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace ferrtree
