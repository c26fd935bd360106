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


#include <complex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ferrtree/error.hpp"
#include "ferrtree/pauli.hpp"
#include "support.hpp"

namespace ferrtree {
namespace {

using testing::dense;

PauliString P(const char* s) { return PauliString::parse(s); }

std::vector<PauliString> all_strings(std::size_t n) {
  std::vector<PauliString> out;
  std::size_t count = 1;
  for (std::size_t q = 0; q < n; ++q) count *= 4;
  for (std::size_t code = 0; code < count; ++code) {
    PauliString s(n);
    std::size_t c = code;
    for (std::size_t q = 0; q < n; ++q, c /= 4) s.set(q, static_cast<Pauli>(c % 4));
    out.push_back(s);
  }
  return out;
}

TEST(PauliTest, ParseAndPrint) {
  EXPECT_EQ(P("XIZY").str(), "XIZY");
  EXPECT_EQ(P("XIZY").at(3), Pauli::Y);
  EXPECT_EQ(P("").size(), 0u);
  EXPECT_THROW(P("XA"), InputError);
  EXPECT_THROW(P("xI"), InputError);
}

TEST(PauliTest, LongStringsCrossWordBoundary) {
  std::string text(130, 'I');
  text[0] = 'X';
  text[64] = 'Y';
  text[129] = 'Z';
  const PauliString s = P(text.c_str());
  EXPECT_EQ(s.str(), text);
  EXPECT_EQ(weight(s), 3u);
  EXPECT_EQ(s.x_words().size(), 3u);
}

TEST(PauliTest, MultiplyExamples) {
  auto [p1, s1] = multiply(P("X"), P("Y"));
  EXPECT_EQ(p1, kPhaseI);
  EXPECT_EQ(s1, P("Z"));
  auto [p2, s2] = multiply(P("Z"), P("Z"));
  EXPECT_EQ(p2, kPhaseOne);
  EXPECT_EQ(s2, P("I"));
  auto [p3, s3] = multiply(P("XIII"), P("YIII"));
  EXPECT_EQ(p3, kPhaseI);
  EXPECT_EQ(s3, P("ZIII"));
  EXPECT_THROW(multiply(P("XI"), P("X")), DimensionError);
}

TEST(PauliTest, MultiplyMatchesDenseOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = all_strings(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto [phase, s] = multiply(a, b);
        const Eigen::MatrixXcd lhs = dense(a) * dense(b);
        const Eigen::MatrixXcd rhs = phase.value() * dense(s);
        ASSERT_LT((lhs - rhs).norm(), 1e-12) << a.str() << " * " << b.str();
        const Eigen::MatrixXcd anti = dense(a) * dense(b) + dense(b) * dense(a);
        ASSERT_EQ(anticommutes(a, b), anti.norm() < 1e-12) << a.str() << ", " << b.str();
      }
  }
}

TEST(PauliTest, MultiplyInPlaceAgrees) {
  const auto all = all_strings(2);
  for (const auto& a : all)
    for (const auto& b : all) {
      PauliString c = a;
      const Phase p = c.multiply_in_place(b);
      EXPECT_EQ(std::make_pair(p, c), multiply(a, b));
    }
}

TEST(PauliTest, NtoExamples) {
  EXPECT_EQ(nto(P("XIII"), P("YIII")), 1u);
  EXPECT_EQ(nto(P("XI"), P("XI")), 0u);
  EXPECT_EQ(nto(P("XY"), P("ZX")), 2u);
  EXPECT_THROW(nto(P("X"), P("XX")), DimensionError);
}

TEST(PauliTest, AnticommutesExamples) {
  EXPECT_TRUE(anticommutes(P("XIII"), P("YIII")));
  EXPECT_FALSE(anticommutes(P("ZZ"), P("ZZ")));
  EXPECT_FALSE(anticommutes(P("XY"), P("ZX")));
  EXPECT_THROW(anticommutes(P("X"), P("XX")), DimensionError);
}

TEST(PauliTest, WeightExamples) {
  EXPECT_EQ(weight(P("ZZZY")), 4u);
  EXPECT_EQ(weight(P("IIII")), 0u);
  std::size_t total = 0;
  for (const auto& s : testing::jw4().strings) total += weight(s);
  EXPECT_EQ(total, 20u);
}

TEST(PauliTest, AlgebraicProperties) {
  const auto all = all_strings(3);
  for (const auto& a : all) {
    EXPECT_EQ(nto(a, a), 0u);
    for (const auto& b : all) {
      const auto [pab, sab] = multiply(a, b);
      const auto [pba, sba] = multiply(b, a);
      EXPECT_EQ(sab, sba);
      const Phase flip = nto(a, b) % 2 ? kPhaseMinusOne : kPhaseOne;
      EXPECT_EQ(pab, pba * flip);
      EXPECT_EQ(nto(a, b), nto(b, a));
      EXPECT_LE(weight(sab), weight(a) + weight(b));
    }
  }
}

TEST(PauliTest, DiagonalAndIdentity) {
  EXPECT_TRUE(P("IZZI").is_diagonal());
  EXPECT_FALSE(P("IZXI").is_diagonal());
  EXPECT_TRUE(P("III").is_identity());
  EXPECT_FALSE(P("IIZ").is_identity());
}

TEST(PauliTest, PhaseValues) {
  EXPECT_EQ(kPhaseI.value(), std::complex<double>(0, 1));
  EXPECT_EQ(kPhaseMinusOne.value(), std::complex<double>(-1, 0));
  EXPECT_EQ(kPhaseI * kPhaseMinusI, kPhaseOne);
}

}  // namespace
}  // namespace ferrtree
