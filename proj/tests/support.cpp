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


#include "support.hpp"

#include <random>

#include "ferrtree/baselines.hpp"
#include "ferrtree/tree.hpp"

namespace ferrtree::testing {

Eigen::MatrixXcd dense(const PauliString& s) {
  using M2 = Eigen::Matrix2cd;
  const std::complex<double> i(0, 1);
  M2 id = M2::Identity();
  M2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < s.size(); ++q) {
    M2 f = id;
    switch (s.at(q)) {
      case Pauli::I: f = id; break;
      case Pauli::X: f = x; break;
      case Pauli::Y: f = y; break;
      case Pauli::Z: f = z; break;
    }
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
    out = std::move(next);
  }
  return out;
}

Eigen::MatrixXcd dense(const QubitHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms) out += t.coefficient * dense(t.string);
  return out;
}

Eigen::MatrixXcd annihilation(std::uint32_t mode, std::uint32_t n_modes) {
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index state = 0; state < dim; ++state) {
    auto occupied = [&](std::uint32_t m) { return (state >> (n_modes - 1 - m)) & 1; };
    if (!occupied(mode)) continue;
    int sign = 1;
    for (std::uint32_t m = 0; m < mode; ++m)
      if (occupied(m)) sign = -sign;
    const Eigen::Index target = state ^ (Eigen::Index{1} << (n_modes - 1 - mode));
    a(target, state) = sign;
  }
  return a;
}

Eigen::MatrixXcd dense(const FermionicHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_modes;
  std::vector<Eigen::MatrixXcd> a, ad;
  for (std::uint32_t m = 0; m < h.n_modes; ++m) {
    a.push_back(annihilation(m, h.n_modes));
    ad.push_back(a.back().adjoint());
  }
  Eigen::MatrixXcd out = h.constant * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& t : h.one_body) out += t.value * ad[t.p] * a[t.q];
  for (const auto& t : h.two_body) out += t.value * ad[t.p] * ad[t.q] * a[t.r] * a[t.s];
  return out;
}

std::vector<PauliString> strings(std::initializer_list<const char*> text) {
  std::vector<PauliString> out;
  for (const char* s : text) out.push_back(PauliString::parse(s));
  return out;
}

Encoding encoding(std::uint32_t n_modes, std::initializer_list<const char*> text) {
  return Encoding{n_modes, strings(text)};
}

Encoding jw4() {
  return encoding(4, {"XIII", "YIII", "ZXII", "ZYII", "ZZXI", "ZZYI", "ZZZX", "ZZZY"});
}

std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(FERRTREE_DATA_DIR) / name;
}

std::uint64_t pauli_weight(const MajoranaHamiltonian& h, const TernaryTree& t) {
  const Encoding e = strings_from_tree(t);
  return weight_metrics(encode_serial(h, e.strings)).wp_total;
}

MajoranaHamiltonian random_majorana(std::uint32_t n_modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t n_majorana = 2 * n_modes;
  const std::uint64_t n_terms = n_modes + uniform_below(rng, 3 * n_modes + 1);
  std::vector<MajoranaTerm> raw;
  for (std::uint64_t k = 0; k < n_terms; ++k) {
    const std::uint32_t len = (n_majorana >= 4 && uniform_below(rng, 2) == 1) ? 4 : 2;
    std::vector<std::uint32_t> perm = random_permutation(rng, n_majorana);
    std::vector<std::uint32_t> support(perm.begin(), perm.begin() + len);
    const double c = 2.0 * uniform_unit(rng) - 1.0;
    raw.push_back({len == 2 ? Complex(0, c) : Complex(c, 0), std::move(support)});
  }
  return MajoranaHamiltonian::from_terms(n_modes, std::move(raw));
}

FermionicHamiltonian random_fermionic(std::uint32_t n_modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto value = [&] { return 2.0 * uniform_unit(rng) - 1.0; };
  FermionicHamiltonian h;
  h.n_modes = n_modes;
  h.constant = value();
  for (std::uint32_t p = 0; p < n_modes; ++p)
    for (std::uint32_t q = p; q < n_modes; ++q) {
      const double v = value();
      h.one_body.push_back({p, q, v});
      if (p != q) h.one_body.push_back({q, p, v});
    }
  // v * (a+_p a+_q a_r a_s + h.c.)
  for (int k = 0; k < 2 * static_cast<int>(n_modes); ++k) {
    const auto p = static_cast<std::uint32_t>(uniform_below(rng, n_modes));
    const auto q = static_cast<std::uint32_t>(uniform_below(rng, n_modes));
    const auto r = static_cast<std::uint32_t>(uniform_below(rng, n_modes));
    const auto s = static_cast<std::uint32_t>(uniform_below(rng, n_modes));
    const double v = value();
    h.two_body.push_back({p, q, r, s, v});
    h.two_body.push_back({s, r, q, p, v});
  }
  return h;
}

}  // namespace ferrtree::testing
