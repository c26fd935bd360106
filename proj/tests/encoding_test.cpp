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


#include <algorithm>
#include <numeric>
#include <set>
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

TEST(StringsFromTreeTest, JordanWignerFour) {
  const Encoding e = strings_from_tree(naive_tree(build_standard(StandardTree::JordanWigner, 4)));
  EXPECT_EQ(e, testing::jw4());
}

TEST(StringsFromTreeTest, BravyiKitaevLeaf) {
  const Encoding e = strings_from_tree(naive_tree(build_standard(StandardTree::BravyiKitaev, 4)));
  // gamma_0 sits at (3,Z): X at q0, Z at q1, Z at q3.
  EXPECT_EQ(e.strings[0].str(), "XZIZ");
  EXPECT_TRUE(validate(e).constant_one_nto);
}

TEST(StringsFromTreeTest, UnindexedLeafRejected) {
  EXPECT_THROW(strings_from_tree(build_standard(StandardTree::JordanWigner, 2)), StructureError);
}

TEST(SeeleyOracleTest, BravyiKitaevMatchesFenwickSets) {
  // Independent construction from update/parity/remainder index sets.
  for (std::uint32_t m = 1; m <= 8; ++m) {
    auto update = [&](std::uint32_t j) {
      std::set<std::uint32_t> u;
      for (std::uint32_t k = j | (j + 1); k < m; k = k | (k + 1)) u.insert(k);
      return u;
    };
    auto parity = [&](std::uint32_t j) {
      std::set<std::uint32_t> p;
      for (std::int64_t k = static_cast<std::int64_t>(j) - 1; k >= 0;
           k = (k & (k + 1)) - 1)
        p.insert(static_cast<std::uint32_t>(k));
      return p;
    };
    auto children = [&](std::uint32_t j) {
      std::set<std::uint32_t> f;
      for (std::uint32_t k = 0; k < j; ++k)
        if ((k | (k + 1)) == j) f.insert(k);
      return f;
    };
    std::set<PauliString> oracle;
    for (std::uint32_t j = 0; j < m; ++j) {
      PauliString even(m), odd(m);
      for (auto k : update(j)) {
        even.set(k, Pauli::X);
        odd.set(k, Pauli::X);
      }
      even.set(j, Pauli::X);
      odd.set(j, Pauli::Y);
      for (auto k : parity(j)) even.set(k, Pauli::Z);
      std::set<std::uint32_t> rem = parity(j);
      for (auto k : children(j)) rem.erase(k);
      for (auto k : rem) odd.set(k, Pauli::Z);
      oracle.insert(even);
      oracle.insert(odd);
    }
    // Tree node ids are a breadth-first relabelling of the Fenwick indices:
    // search for a column permutation that maps one set onto the other.
    const Encoding e = strings_from_tree(naive_tree(build_standard(StandardTree::BravyiKitaev, m)));
    const std::set<PauliString> tree(e.strings.begin(), e.strings.end());
    std::vector<std::uint32_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    bool found = false;
    do {
      std::set<PauliString> moved;
      for (const auto& s : oracle) {
        PauliString t(m);
        for (std::uint32_t q = 0; q < m; ++q) t.set(perm[q], s.at(q));
        moved.insert(t);
      }
      found = moved == tree;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    EXPECT_TRUE(found) << "M=" << m;
  }
}

TEST(ApplyEnumerationTest, Identity) {
  const Encoding jw = testing::jw4();
  EXPECT_EQ(apply_enumeration(jw, EnumerationScheme{}), jw);
  EXPECT_EQ(apply_enumeration(jw, EnumerationScheme::identity(4)), jw);
}

TEST(ApplyEnumerationTest, SwapModes) {
  const Encoding jw = testing::jw4();
  const Encoding e = apply_enumeration(jw, EnumerationScheme{{0, 2, 1, 3}, {}});
  EXPECT_EQ(e.strings[2], jw.strings[4]);
  EXPECT_EQ(e.strings[3], jw.strings[5]);
  EXPECT_EQ(e.strings[4], jw.strings[2]);
  EXPECT_EQ(e.strings[5], jw.strings[3]);
  EXPECT_EQ(e.strings[0], jw.strings[0]);
}

TEST(ApplyEnumerationTest, SwapQubits) {
  const Encoding e = apply_enumeration(testing::jw4(), EnumerationScheme{{}, {0, 2, 1, 3}});
  EXPECT_EQ(e, testing::encoding(4, {"XIII", "YIII", "ZIXI", "ZIYI", "ZXZI", "ZYZI", "ZZZX",
                                     "ZZZY"}));
}

TEST(ApplyEnumerationTest, TreeFormAgrees) {
  const TernaryTree t = naive_tree(build_standard(StandardTree::JKMN, 6));
  const EnumerationScheme s{{3, 1, 5, 0, 2, 4}, {2, 0, 1, 5, 4, 3}};
  EXPECT_EQ(apply_enumeration(t, s), apply_enumeration(strings_from_tree(t), s));
  EXPECT_EQ(strings_from_tree(relabel_tree(t, s)), apply_enumeration(t, s));
}

TEST(ApplyEnumerationTest, Errors) {
  const Encoding jw = testing::jw4();
  EXPECT_THROW(apply_enumeration(jw, EnumerationScheme{{0, 0, 1, 2}, {}}), ArgumentError);
  EXPECT_THROW(apply_enumeration(jw, EnumerationScheme{{0, 1, 2}, {}}), ArgumentError);
  EXPECT_THROW(apply_enumeration(jw, EnumerationScheme{{}, {0, 1, 2, 4}}), ArgumentError);
}

TEST(ApplyEnumerationTest, PreservesValidityAndNtoMultiset) {
  const Encoding base = build_maxnto(6);
  const EnumerationScheme s{{5, 3, 1, 0, 2, 4}, {1, 0, 3, 2, 5, 4}};
  const Encoding e = apply_enumeration(base, s);
  EXPECT_TRUE(validate(e).valid());
  auto multiset = [](const Encoding& x) {
    std::multiset<std::uint32_t> out;
    for (const auto& row : nto_matrix(x))
      for (auto v : row) out.insert(v);
    return out;
  };
  EXPECT_EQ(multiset(e), multiset(base));
  std::size_t w0 = 0, w1 = 0;
  for (const auto& s0 : base.strings) w0 += weight(s0);
  for (const auto& s1 : e.strings) w1 += weight(s1);
  EXPECT_EQ(w0, w1);
}

TEST(ValidateTest, JordanWignerFour) {
  const ValidityReport r = validate(testing::jw4());
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.constant_one_nto);
  EXPECT_EQ(r.rank, 8u);
  EXPECT_EQ(r.max_nto, 1u);
}

TEST(ValidateTest, DuplicatedStringFailsRank) {
  const ValidityReport r =
      validate(testing::encoding(2, {"XI", "YI", "ZX", "ZX"}));
  EXPECT_FALSE(r.valid());
  EXPECT_FALSE(r.full_rank);
  EXPECT_FALSE(r.anticommuting);
  ASSERT_TRUE(r.commuting_pair.has_value());
  EXPECT_EQ(*r.commuting_pair, std::make_pair(std::size_t{2}, std::size_t{3}));
}

TEST(ValidateTest, TwoModeSet) {
  const Encoding e = testing::encoding(2, {"XI", "YI", "ZX", "ZY"});
  const ValidityReport r = validate(e);
  EXPECT_TRUE(r.valid());
  // Oracle: dense anticommutators.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Eigen::MatrixXcd a = dense(e.strings[i]) * dense(e.strings[j]) +
                                 dense(e.strings[j]) * dense(e.strings[i]);
      const Eigen::MatrixXcd expect =
          (i == j ? 2.0 : 0.0) * Eigen::MatrixXcd::Identity(4, 4);
      EXPECT_LT((a - expect).norm(), 1e-12);
    }
}

TEST(ValidateTest, CountAndLengthFailures) {
  EXPECT_FALSE(validate(testing::encoding(2, {"XI", "YI", "ZX"})).count_ok);
  EXPECT_FALSE(validate(testing::encoding(2, {"XI", "YI", "ZX", "ZYI"})).lengths_ok);
  // Anticommuting but dependent: product of all four is proportional to I.
  const ValidityReport r = validate(testing::encoding(1, {"X", "Y"}));
  EXPECT_TRUE(r.valid());
}

TEST(RankTest, Examples) {
  EXPECT_EQ(symplectic_rank(testing::strings({"XI", "YI", "ZI"})), 2u);
  EXPECT_EQ(symplectic_rank(testing::strings({"XX", "ZZ", "YY"})), 2u);
  EXPECT_EQ(symplectic_rank(testing::jw4().strings), 8u);
  EXPECT_EQ(symplectic_rank({}), 0u);
}

TEST(NtoMatrixTest, JordanWignerAllOnes) {
  const auto m = nto_matrix(testing::jw4());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(m[i][j], i == j ? 0u : 1u);
}

TEST(MaxNtoTest, Examples) {
  for (std::uint32_t m = 2; m <= 12; ++m) {
    const Encoding e = build_maxnto(m);
    const ValidityReport r = validate(e);
    EXPECT_TRUE(r.valid()) << m;
    EXPECT_TRUE(check_vacuum(e).preserving) << m;
    const std::uint32_t expected_max = m % 2 == 0 ? m - 1 : m - 2;
    EXPECT_EQ(r.max_nto, expected_max) << m;
    std::set<std::uint32_t> values;
    for (const auto& row : nto_matrix(e))
      for (auto v : row) values.insert(v);
    for (std::uint32_t v = 1; v <= expected_max; v += 2) EXPECT_TRUE(values.count(v)) << m;
    for (auto v : values) EXPECT_TRUE(v == 0 || v % 2 == 1) << m;
  }
  EXPECT_EQ(validate(build_maxnto(2)).max_nto, 1u);
  EXPECT_THROW(build_maxnto(1), ArgumentError);
}

TEST(VacuumTest, DenseOracle) {
  // n_m = (I + i g_2m g_2m+1)/2 must annihilate |0...0> for every mode.
  for (auto kind : {StandardTree::JordanWigner, StandardTree::Parity, StandardTree::BravyiKitaev,
                    StandardTree::JKMN}) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const Encoding e = strings_from_tree(naive_tree(build_standard(kind, m)));
      EXPECT_TRUE(check_vacuum(e).preserving);
      const Eigen::Index dim = Eigen::Index{1} << m;
      Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(dim);
      vac(0) = 1.0;
      for (std::uint32_t k = 0; k < m; ++k) {
        const Eigen::MatrixXcd n =
            0.5 * (Eigen::MatrixXcd::Identity(dim, dim) +
                   Complex(0, 1) * dense(e.strings[2 * k]) * dense(e.strings[2 * k + 1]));
        EXPECT_LT((n * vac).norm(), 1e-12) << to_string(kind) << " M=" << m << " mode " << k;
      }
    }
  }
}

TEST(VacuumTest, SwappedPairDetected) {
  const VacuumReport r = check_vacuum(testing::encoding(2, {"XI", "YI", "ZY", "ZX"}));
  EXPECT_FALSE(r.preserving);
  EXPECT_EQ(r.first_bad_mode, 1u);
  EXPECT_FALSE(check_vacuum(testing::encoding(1, {"X", "Z"})).preserving);
}

TEST(VacuumTest, AllStandardTreesUpToSixteen) {
  for (auto kind : {StandardTree::JordanWigner, StandardTree::Parity, StandardTree::BravyiKitaev,
                    StandardTree::JKMN}) {
    for (std::uint32_t m = 1; m <= 16; ++m) {
      const Encoding e = strings_from_tree(naive_tree(build_standard(kind, m)));
      const ValidityReport r = validate(e);
      EXPECT_TRUE(r.valid());
      EXPECT_TRUE(r.constant_one_nto);
      EXPECT_TRUE(check_vacuum(e).preserving);
    }
  }
}

}  // namespace
}  // namespace ferrtree
