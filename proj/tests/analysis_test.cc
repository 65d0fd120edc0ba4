// Copyright 2026 The Adaptive Codes Authors
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

#include "adaptive/analysis.h"

#include <random>

#include "adaptive/builder.h"
#include "adaptive/codec.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace adaptive {
namespace {

using testing::Indices;

CodeTable Builder(std::string_view symbols) {
  return BuildOrder1(Alphabet::FromBytes(symbols));
}

TEST(PairStatsTest, Examples) {
  PairStats a = ComputePairStats(Indices(testing::kPairString1));
  EXPECT_EQ(a.pairs, (std::vector<std::size_t>{2, 3, 8, 10, 13, 16}));
  EXPECT_EQ(a.nrpairs, 6u);
  EXPECT_EQ(a.prate_exact(), Rational(3, 10));

  PairStats b = ComputePairStats(Indices(testing::kPairString2));
  EXPECT_EQ(b.pairs, (std::vector<std::size_t>{2, 3, 5, 8, 10, 13, 15, 16}));
  EXPECT_EQ(b.prate_exact(), Rational(2, 5));

  PairStats c = ComputePairStats(Indices("ab"));
  EXPECT_TRUE(c.pairs.empty());
  EXPECT_EQ(c.prate(), 0.0);

  EXPECT_TRUE(ComputePairStats(Indices("a")).pairs.empty());
  EXPECT_THROW(ComputePairStats({}), Error);
}

TEST(EntropyTest, Examples) {
  EXPECT_DOUBLE_EQ(HuffmanEntropy(Indices("aaaa")), 0.0);
  EXPECT_DOUBLE_EQ(HuffmanEntropy(Indices("aabb")), 1.0);
  EXPECT_NEAR(HuffmanEntropy(Indices(testing::kPairString1)),
              1.570950594454668639, 1e-12);
}

TEST(HuffmanRateTest, Examples) {
  EXPECT_DOUBLE_EQ(HuffmanRate(Indices(testing::kPairString1)), 1.6);
  EXPECT_EQ(HuffmanBits(Indices(testing::kPairString1)), 32u);
  EXPECT_EQ(HuffmanBits(Indices(testing::kPairString2)), 33u);
  EXPECT_DOUBLE_EQ(HuffmanRate(Indices("aaaa")), 1.0);
  EXPECT_DOUBLE_EQ(HuffmanRate(Indices("aabb")), 1.0);
}

TEST(EhPositionsTest, Examples) {
  EXPECT_EQ(EhPositions(Indices("aab")), std::vector<std::size_t>{3});
  EXPECT_TRUE(EhPositions(Indices("aaaa")).empty());
  EXPECT_EQ(EhPositions(Indices("ab")), std::vector<std::size_t>{2});
}

TEST(LNotHuffmanTest, Examples) {
  EXPECT_EQ(LNotHuffman(Indices("aa"), Builder("ab")), 2u);
  EXPECT_EQ(LNotHuffman(Indices("ab"), Builder("ab")), 1u);
  EXPECT_EQ(LNotHuffman(Indices(testing::kPairString1), Builder("abc")), 7u);
  EXPECT_THROW(LNotHuffman(Indices("ab"), testing::Order2Table()), Error);
}

TEST(LHuffmanTest, Examples) {
  EXPECT_DOUBLE_EQ(LHuffman(Indices("aaaa")), 0.0);
  EXPECT_DOUBLE_EQ(LHuffman(Indices("ab")), 1.0);
  EXPECT_DOUBLE_EQ(LHuffman(Indices("abab")), 3.0);
  EXPECT_DOUBLE_EQ(testing::LiteralLHuffman(Indices("abab")), 3.0);
}

TEST(HATest, Examples) {
  EXPECT_DOUBLE_EQ(HA(Indices("aa"), Builder("ab")), 2.0);
  EXPECT_DOUBLE_EQ(HA(Indices("ab"), Builder("ab")), 2.0);
  EXPECT_DOUBLE_EQ(HA(Indices("aaaa"), Builder("ab")), 4.0);
}

TEST(RALiteralTest, Examples) {
  EXPECT_DOUBLE_EQ(RALiteral(Indices(testing::kPairString1), Builder("abc")), 1.65);
  EXPECT_DOUBLE_EQ(RALiteral(Indices(testing::kPairString2), Builder("abc")), 1.55);
  EXPECT_DOUBLE_EQ(RALiteral(Indices("aa"), Builder("ab")), 1.0);
}

TEST(CompareReportTest, PublishedRows) {
  AnalysisReport r1 = CompareReport(Indices(testing::kPairString1), Builder("abc"), "w1");
  EXPECT_EQ(r1.stats.nrpairs, 6u);
  EXPECT_EQ(r1.encoded_bits, 33u);
  EXPECT_EQ(r1.huffman_total_bits, 32u);
  EXPECT_FALSE(r1.published_huffman_bits.has_value());
  EXPECT_FALSE(r1.adaptive_wins());

  AnalysisReport r2 = CompareReport(Indices(testing::kPairString2), Builder("abc"), "w2");
  EXPECT_EQ(r2.stats.nrpairs, 8u);
  EXPECT_EQ(r2.encoded_bits, 31u);
  EXPECT_EQ(r2.huffman_total_bits, 33u);
  EXPECT_EQ(r2.published_huffman_bits, std::optional<std::uint64_t>(34));
  EXPECT_TRUE(r2.adaptive_wins());

  AnalysisReport aa = CompareReport(Indices("aa"), Builder("ab"));
  EXPECT_EQ(aa.stats.nrpairs, 1u);
  EXPECT_DOUBLE_EQ(aa.stats.prate(), 0.5);
  EXPECT_EQ(aa.encoded_bits, 2u);
  EXPECT_EQ(aa.huffman_total_bits, 2u);
}

TEST(CompareReportTest, BoundFlagsForTwoSymbolString) {
  // H_A = 2 bits and R_A = 1 bit/symbol: the literal bound reads 2 <= 1.
  AnalysisReport r = CompareReport(Indices("ab"), Builder("ab"));
  ASSERT_TRUE(r.h_a.has_value());
  EXPECT_DOUBLE_EQ(*r.h_a, 2.0);
  EXPECT_DOUBLE_EQ(r.r_a_literal, 1.0);
  EXPECT_EQ(r.bound_literal_holds, std::optional(false));
  EXPECT_EQ(r.bound_total_holds, std::optional(true));
}

TEST(CompareReportTest, HigherOrderTableSkipsPairCosts) {
  AnalysisReport r = CompareReport(Indices("abaa"), testing::Order2Table());
  EXPECT_EQ(r.encoded_bits, 4u);
  EXPECT_FALSE(r.l_not_huffman.has_value());
  EXPECT_FALSE(r.h_a.has_value());
}

TEST(RenderTest, CompareTableFootnotesDeviation) {
  std::vector<AnalysisReport> reports = {
      CompareReport(Indices(testing::kPairString1), Builder("abc"), "w1"),
      CompareReport(Indices(testing::kPairString2), Builder("abc"), "w2")};
  std::string text = RenderCompareTable(reports);
  EXPECT_NE(text.find("33†"), std::string::npos);
  EXPECT_NE(text.find("lists 34"), std::string::npos);
  EXPECT_NE(text.find("adaptive wins on 1 of 2"), std::string::npos);

  std::string csv = RenderCsv(reports);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "string-id,length,nrpairs,prate,adaptive_bits,huffman_bits,H,R,"
            "LNotHuffman,LHuffman,H_A,R_A");
  EXPECT_NE(csv.find("w1,20,6,0.300000,33,32,"), std::string::npos);
  EXPECT_NE(csv.find("w2,20,8,0.400000,31,33,"), std::string::npos);
}

TEST(AnalysisPropertyTest, HuffmanBoundsAndCounts) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t h = 1 + rng() % 8;
    auto w = testing::RandomString(h, 1 + rng() % 500, rng);
    double entropy = HuffmanEntropy(w);
    double rate = HuffmanRate(w);
    EXPECT_LE(entropy, rate + 1e-9);
    EXPECT_LE(rate, entropy + 1 + 1e-9);
    EXPECT_EQ(ComputePairStats(w).nrpairs + EhPositions(w).size(), w.size() - 1);
  }
}

TEST(AnalysisPropertyTest, MatchesLiteralFormulas) {
  CodeTable t = Builder("abc");
  for (std::size_t k = 1; k <= 6; ++k) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<SymbolIndex> w(k);
      std::size_t c = code;
      for (auto& s : w) {
        s = static_cast<SymbolIndex>(c % 3);
        c /= 3;
      }
      EXPECT_NEAR(LHuffman(w), testing::LiteralLHuffman(w), 1e-12);
      EXPECT_NEAR(HA(w, t),
                  testing::LiteralLNotHuffman(w, t) + testing::LiteralLHuffman(w),
                  1e-12);
      EXPECT_EQ(RALiteral(w, t) * static_cast<double>(k),
                static_cast<double>(Encode(t, w).size()));
    }
  }
}

}  // namespace
}  // namespace adaptive
