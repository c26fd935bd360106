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

#include "ferrtree/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "ferrtree/error.hpp"

namespace ferrtree {

namespace {

bool support_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct SupportOrder {
  bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    return support_less(a, b);
  }
};

using TermAccumulator = std::map<std::vector<std::uint32_t>, Complex, SupportOrder>;

// One ladder operator as a two-term Majorana sum.
struct LadderOp {
  std::uint32_t mode;
  bool dagger;
};

void expand_product(std::span<const LadderOp> ops, double value, TermAccumulator& acc) {
  const std::size_t k = ops.size();
  std::vector<std::uint32_t> indices(k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Complex coeff{value, 0.0};
    for (std::size_t i = 0; i < k; ++i) {
      const bool odd = (mask >> i) & 1u;
      indices[i] = 2 * ops[i].mode + (odd ? 1 : 0);
      if (!odd) {
        coeff *= 0.5;
      } else {
        coeff *= Complex{0.0, ops[i].dagger ? -0.5 : 0.5};
      }
    }
    std::vector<std::uint32_t> support = indices;
    const int sign = canonicalize_product(support);
    acc[std::move(support)] += static_cast<double>(sign) * coeff;
  }
}

MajoranaHamiltonian build(std::uint32_t n_modes, const TermAccumulator& acc) {
  std::vector<MajoranaTerm> terms;
  terms.reserve(acc.size());
  for (const auto& [support, coeff] : acc) {
    if (std::abs(coeff) > kCoefficientThreshold) terms.push_back({coeff, support});
  }
  return MajoranaHamiltonian::from_terms(n_modes, std::move(terms));
}

void check_mode(std::uint32_t index, std::uint32_t n_modes, const char* what, std::size_t pos) {
  if (index >= n_modes) {
    throw InputError(std::string(what) + " term " + std::to_string(pos) + ": mode index " +
                     std::to_string(index) + " out of range for " + std::to_string(n_modes) +
                     " modes");
  }
}

}  // namespace

int canonicalize_product(std::vector<std::uint32_t>& indices) {
  int sign = 1;
  // Insertion sort; each transposition of distinct Majoranas flips the sign.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && indices[j - 1] > indices[j]) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
      --j;
    }
  }
  std::vector<std::uint32_t> out;
  out.reserve(indices.size());
  for (auto v : indices) {
    if (!out.empty() && out.back() == v) {
      out.pop_back();
    } else {
      out.push_back(v);
    }
  }
  indices = std::move(out);
  return sign;
}

MajoranaHamiltonian MajoranaHamiltonian::from_terms(std::uint32_t n_modes,
                                                    std::vector<MajoranaTerm> raw) {
  TermAccumulator acc;
  for (std::size_t pos = 0; pos < raw.size(); ++pos) {
    auto& term = raw[pos];
    if (!std::isfinite(term.coefficient.real()) || !std::isfinite(term.coefficient.imag())) {
      throw InputError("term " + std::to_string(pos) + ": non-finite coefficient");
    }
    for (auto idx : term.support) {
      if (idx >= 2 * n_modes) {
        throw InputError("term " + std::to_string(pos) + ": Majorana index " +
                         std::to_string(idx) + " out of range for " + std::to_string(n_modes) +
                         " modes");
      }
    }
    const int sign = canonicalize_product(term.support);
    acc[std::move(term.support)] += static_cast<double>(sign) * term.coefficient;
  }
  MajoranaHamiltonian h(n_modes);
  h.terms_.reserve(acc.size());
  for (auto& [support, coeff] : acc) {
    if (std::abs(coeff) > kCoefficientThreshold) h.terms_.push_back({coeff, support});
  }
  return h;
}

MajoranaHamiltonian from_fermionic(const FermionicHamiltonian& h) {
  TermAccumulator acc;
  if (!std::isfinite(h.constant)) throw InputError("non-finite constant term");
  if (h.constant != 0.0) acc[{}] += h.constant;
  for (std::size_t pos = 0; pos < h.one_body.size(); ++pos) {
    const auto& t = h.one_body[pos];
    check_mode(t.p, h.n_modes, "one-body", pos);
    check_mode(t.q, h.n_modes, "one-body", pos);
    if (!std::isfinite(t.value)) {
      throw InputError("one-body term " + std::to_string(pos) + ": non-finite value");
    }
    const LadderOp ops[] = {{t.p, true}, {t.q, false}};
    expand_product(ops, t.value, acc);
  }
  for (std::size_t pos = 0; pos < h.two_body.size(); ++pos) {
    const auto& t = h.two_body[pos];
    for (auto idx : {t.p, t.q, t.r, t.s}) check_mode(idx, h.n_modes, "two-body", pos);
    if (!std::isfinite(t.value)) {
      throw InputError("two-body term " + std::to_string(pos) + ": non-finite value");
    }
    const LadderOp ops[] = {{t.p, true}, {t.q, true}, {t.r, false}, {t.s, false}};
    expand_product(ops, t.value, acc);
  }
  return build(h.n_modes, acc);
}

double QubitHamiltonian::max_imaginary() const {
  double worst = 0.0;
  for (const auto& t : terms) worst = std::max(worst, std::abs(t.coefficient.imag()));
  return worst;
}

namespace {

void check_strings(const MajoranaHamiltonian& h, std::span<const PauliString> strings) {
  if (strings.size() != 2 * static_cast<std::size_t>(h.n_modes())) {
    throw DimensionError("encoding has " + std::to_string(strings.size()) +
                         " strings; Hamiltonian needs " + std::to_string(2 * h.n_modes()));
  }
}

PauliString encode_term(const MajoranaTerm& term, std::span<const PauliString> strings,
                        std::size_t n_qubits, Complex& coeff) {
  PauliString acc(n_qubits);
  Phase phase = kPhaseOne;
  for (auto idx : term.support) phase = phase * acc.multiply_in_place(strings[idx]);
  coeff = term.coefficient * phase.value();
  return acc;
}

QubitHamiltonian merge(std::uint32_t n_qubits, std::vector<QubitTerm>&& products) {
  QubitHamiltonian out;
  out.n_qubits = n_qubits;
  std::unordered_map<PauliString, std::size_t> index;
  index.reserve(products.size());
  for (auto& p : products) {
    auto [it, inserted] = index.try_emplace(p.string, out.terms.size());
    if (inserted) {
      out.terms.push_back(std::move(p));
    } else {
      out.terms[it->second].coefficient += p.coefficient;
    }
  }
  std::erase_if(out.terms,
                [](const QubitTerm& t) { return std::abs(t.coefficient) <= kCoefficientThreshold; });
  return out;
}

}  // namespace

QubitHamiltonian encode_serial(const MajoranaHamiltonian& h,
                               std::span<const PauliString> strings) {
  check_strings(h, strings);
  const std::size_t n_qubits = strings.empty() ? 0 : strings.front().size();
  std::vector<QubitTerm> products(h.size());
  const auto terms = h.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    products[i].string = encode_term(terms[i], strings, n_qubits, products[i].coefficient);
  }
  return merge(static_cast<std::uint32_t>(n_qubits), std::move(products));
}

QubitHamiltonian encode(const MajoranaHamiltonian& h, std::span<const PauliString> strings) {
  check_strings(h, strings);
  const std::size_t n_qubits = strings.empty() ? 0 : strings.front().size();
  std::vector<QubitTerm> products(h.size());
  const auto terms = h.terms();
  const auto n = static_cast<std::int64_t>(terms.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    products[i].string = encode_term(terms[i], strings, n_qubits, products[i].coefficient);
  }
  return merge(static_cast<std::uint32_t>(n_qubits), std::move(products));
}

double lambda_norm(const QubitHamiltonian& h) {
  double total = 0.0;
  for (const auto& t : h.terms) {
    if (!t.string.is_identity()) total += std::abs(t.coefficient);
  }
  return total;
}

WeightMetrics weight_metrics(const QubitHamiltonian& h, bool include_identity) {
  WeightMetrics m;
  for (const auto& t : h.terms) {
    const std::size_t w = weight(t.string);
    if (w == 0 && !include_identity) continue;
    ++m.n_terms;
    m.wp_total += w;
    m.wcp_total += std::abs(t.coefficient) * static_cast<double>(w);
  }
  if (m.n_terms > 0) {
    m.avg_wp = static_cast<double>(m.wp_total) / static_cast<double>(m.n_terms);
    m.avg_wcp = m.wcp_total / static_cast<double>(m.n_terms);
  }
  return m;
}

}  // namespace ferrtree
