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


#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "ferrtree/encoding.hpp"
#include "ferrtree/error.hpp"
#include "ferrtree/majorana.hpp"
#include "ferrtree/tree.hpp"
#include "support.hpp"

namespace ferrtree {
namespace {

using testing::dense;

const Complex kI{0.0, 1.0};

FermionicHamiltonian number_operator() {
  FermionicHamiltonian h;
  h.n_modes = 1;
  h.one_body = {{0, 0, 1.0}};
  return h;
}

TEST(CanonicalizeTest, SortsWithSign) {
  std::vector<std::uint32_t> a = {1, 0};
  EXPECT_EQ(canonicalize_product(a), -1);
  EXPECT_EQ(a, (std::vector<std::uint32_t>{0, 1}));

  std::vector<std::uint32_t> b = {2, 0, 1};
  EXPECT_EQ(canonicalize_product(b), 1);
  EXPECT_EQ(b, (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(CanonicalizeTest, CancelsPairs) {
  std::vector<std::uint32_t> a = {3, 1, 3};  // g3 g1 g3 = -g1
  EXPECT_EQ(canonicalize_product(a), -1);
  EXPECT_EQ(a, (std::vector<std::uint32_t>{1}));
  std::vector<std::uint32_t> b = {2, 2};
  EXPECT_EQ(canonicalize_product(b), 1);
  EXPECT_TRUE(b.empty());
}

TEST(FromFermionicTest, NumberOperator) {
  const MajoranaHamiltonian h = from_fermionic(number_operator());
  ASSERT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.terms()[0].support.empty());
  EXPECT_NEAR(std::abs(h.terms()[0].coefficient - Complex(0.5, 0)), 0.0, 1e-15);
  EXPECT_EQ(h.terms()[1].support, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_NEAR(std::abs(h.terms()[1].coefficient - 0.5 * kI), 0.0, 1e-15);
}

TEST(FromFermionicTest, ZeroIntegrals) {
  FermionicHamiltonian f;
  f.n_modes = 3;
  f.one_body = {{0, 1, 0.0}};
  EXPECT_TRUE(from_fermionic(f).empty());
}

TEST(FromFermionicTest, Hopping) {
  FermionicHamiltonian f;
  f.n_modes = 2;
  f.one_body = {{0, 1, 1.0}, {1, 0, 1.0}};
  const MajoranaHamiltonian h = from_fermionic(f);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h.terms()[0].support, (std::vector<std::uint32_t>{0, 3}));
  EXPECT_EQ(h.terms()[1].support, (std::vector<std::uint32_t>{1, 2}));
  for (const auto& t : h.terms()) EXPECT_NEAR(std::abs(t.coefficient), 0.5, 1e-15);
}

TEST(FromFermionicTest, RejectsBadInput) {
  FermionicHamiltonian f;
  f.n_modes = 2;
  f.one_body = {{0, 2, 1.0}};
  EXPECT_THROW(from_fermionic(f), InputError);
  f.one_body = {{0, 1, std::nan("")}};
  EXPECT_THROW(from_fermionic(f), InputError);
}

TEST(FromTermsTest, MergesAndDrops) {
  const MajoranaHamiltonian h = MajoranaHamiltonian::from_terms(
      2, {{Complex(1, 0), {1, 0}}, {Complex(1, 0), {0, 1}}, {Complex(2, 0), {2, 3}},
          {Complex(1e-13, 0), {0, 2}}});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.terms()[0].support, (std::vector<std::uint32_t>{2, 3}));
  EXPECT_THROW(MajoranaHamiltonian::from_terms(2, {{Complex(1, 0), {4}}}), InputError);
  EXPECT_THROW(MajoranaHamiltonian::from_terms(2, {{Complex(INFINITY, 0), {0}}}), InputError);
}

TEST(EncodeTest, NumberOperatorUnderXY) {
  const MajoranaHamiltonian h = from_fermionic(number_operator());
  const QubitHamiltonian q = encode(h, testing::strings({"X", "Y"}));
  ASSERT_EQ(q.terms.size(), 2u);
  EXPECT_EQ(q.terms[0].string.str(), "I");
  EXPECT_NEAR(std::abs(q.terms[0].coefficient - Complex(0.5, 0)), 0.0, 1e-15);
  EXPECT_EQ(q.terms[1].string.str(), "Z");
  EXPECT_NEAR(std::abs(q.terms[1].coefficient - Complex(-0.5, 0)), 0.0, 1e-15);
}

TEST(EncodeTest, EmptyAndWrongLength) {
  const MajoranaHamiltonian h(4);
  EXPECT_TRUE(encode(h, testing::jw4().strings).terms.empty());
  EXPECT_THROW(encode(h, testing::strings({"X", "Y"})), DimensionError);
}

TEST(EncodeTest, PermutedSupportGivesSameEntry) {
  const auto s = testing::jw4().strings;
  const QubitHamiltonian a =
      encode(MajoranaHamiltonian::from_terms(4, {{Complex(0.3, 0), {0, 3, 5, 6}}}), s);
  const QubitHamiltonian b =
      encode(MajoranaHamiltonian::from_terms(4, {{Complex(-0.3, 0), {3, 0, 5, 6}}}), s);
  const QubitHamiltonian c =
      encode(MajoranaHamiltonian::from_terms(4, {{Complex(0.3, 0), {6, 0, 5, 3}}}), s);
  ASSERT_EQ(a.terms.size(), 1u);
  EXPECT_EQ(a.terms[0].string, b.terms[0].string);
  EXPECT_NEAR(std::abs(a.terms[0].coefficient - b.terms[0].coefficient), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a.terms[0].coefficient - c.terms[0].coefficient), 0.0, 1e-15);
}

TEST(EncodeTest, JordanWignerMatchesDenseFermionic) {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const FermionicHamiltonian f = testing::random_fermionic(m, 100 * m + seed);
      const Encoding jw = strings_from_tree(naive_tree(build_standard(StandardTree::JordanWigner, m)));
      const QubitHamiltonian q = encode(from_fermionic(f), jw.strings);
      EXPECT_LT((dense(q) - dense(f)).norm(), 1e-10) << "M=" << m << " seed=" << seed;
      EXPECT_LT(q.max_imaginary(), 1e-12);
    }
  }
}

TEST(EncodeTest, OtherTreesPreserveSpectrumAndVacuum) {
  for (auto kind : {StandardTree::Parity, StandardTree::BravyiKitaev, StandardTree::JKMN}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const FermionicHamiltonian f = testing::random_fermionic(m, 7 + m);
      const Encoding e = strings_from_tree(naive_tree(build_standard(kind, m)));
      const QubitHamiltonian q = encode(from_fermionic(f), e.strings);
      const Eigen::MatrixXcd hq = dense(q);
      const Eigen::MatrixXcd hf = dense(f);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sq(hq), sf(hf);
      EXPECT_LT((sq.eigenvalues() - sf.eigenvalues()).norm(), 1e-9) << to_string(kind) << m;
      // Particle-conserving: the vacuum is an eigenstate with energy = constant.
      Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(hq.rows());
      vac(0) = 1.0;
      EXPECT_LT((hq * vac - f.constant * vac).norm(), 1e-10) << to_string(kind) << m;
    }
  }
}

TEST(EncodeTest, SerialMatchesParallel) {
  const MajoranaHamiltonian h = testing::random_majorana(6, 3);
  const Encoding e = strings_from_tree(naive_tree(build_standard(StandardTree::JKMN, 6)));
  const QubitHamiltonian a = encode(h, e.strings);
  const QubitHamiltonian b = encode_serial(h, e.strings);
  ASSERT_EQ(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    EXPECT_EQ(a.terms[i].string, b.terms[i].string);
    EXPECT_EQ(a.terms[i].coefficient, b.terms[i].coefficient);
  }
}

QubitHamiltonian qh(std::initializer_list<std::pair<const char*, double>> terms) {
  QubitHamiltonian h;
  for (const auto& [s, c] : terms) {
    h.terms.push_back({Complex(c, 0), PauliString::parse(s)});
    h.n_qubits = static_cast<std::uint32_t>(h.terms.back().string.size());
  }
  return h;
}

TEST(LambdaTest, Examples) {
  EXPECT_DOUBLE_EQ(lambda_norm(qh({{"Z", 1.0}, {"X", 1.0}})), 2.0);
  EXPECT_DOUBLE_EQ(lambda_norm(qh({{"I", 0.5}, {"Z", -0.5}})), 0.5);
  EXPECT_DOUBLE_EQ(lambda_norm(QubitHamiltonian{}), 0.0);
}

TEST(LambdaTest, InvariantUnderEnumeration) {
  const MajoranaHamiltonian h = testing::random_majorana(4, 11);
  const Encoding jw = testing::jw4();
  EnumerationScheme s{{2, 0, 3, 1}, {1, 3, 0, 2}};
  const double a = lambda_norm(encode(h, jw.strings));
  const double b = lambda_norm(encode(h, apply_enumeration(jw, s).strings));
  EXPECT_NEAR(a, b, 1e-12);
}

TEST(WeightMetricsTest, Examples) {
  const WeightMetrics a = weight_metrics(qh({{"ZZ", 0.5}}));
  EXPECT_EQ(a.wp_total, 2u);
  EXPECT_DOUBLE_EQ(a.wcp_total, 1.0);
  const WeightMetrics b = weight_metrics(qh({{"I", 3.0}}));
  EXPECT_EQ(b.wp_total, 0u);
  EXPECT_DOUBLE_EQ(b.wcp_total, 0.0);
  EXPECT_EQ(b.n_terms, 0u);
  EXPECT_EQ(weight_metrics(qh({{"I", 3.0}}), true).n_terms, 1u);

  QubitHamiltonian eq5;
  eq5.n_qubits = 4;
  for (const auto& s : testing::jw4().strings) eq5.terms.push_back({Complex(1, 0), s});
  const WeightMetrics c = weight_metrics(eq5);
  EXPECT_EQ(c.wp_total, 20u);
  EXPECT_DOUBLE_EQ(c.wcp_total, 20.0);
  EXPECT_DOUBLE_EQ(c.avg_wp, 2.5);
}

}  // namespace
}  // namespace ferrtree
