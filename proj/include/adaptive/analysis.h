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

#ifndef ADAPTIVE_ANALYSIS_H_
#define ADAPTIVE_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adaptive/core.h"
#include "adaptive/prefix_codes.h"

namespace adaptive {

// Adjacent equal-symbol statistics. Positions are 1-based: i is a pair
// position when w_i == w_{i+1}.
struct PairStats {
  std::vector<std::size_t> pairs;
  std::size_t nrpairs = 0;
  std::size_t length = 0;

  double prate() const {
    return static_cast<double>(nrpairs) / static_cast<double>(length);
  }
  Rational prate_exact() const { return Rational(nrpairs, length); }
};

// All functions below throw kInvalidArgument on an empty string.
PairStats ComputePairStats(std::span<const SymbolIndex> w);

// 1-based positions i >= 2 with w_i != w_{i-1}.
std::vector<std::size_t> EhPositions(std::span<const SymbolIndex> w);

// Frequencies of the symbols occurring in `w`, by increasing symbol index.
FrequencyTable SymbolFrequencies(std::span<const SymbolIndex> w);

// Zero-order empirical entropy in bits per symbol.
double HuffmanEntropy(std::span<const SymbolIndex> w);
std::uint64_t HuffmanBits(std::span<const SymbolIndex> w);
// HuffmanBits(w) / |w|.
double HuffmanRate(std::span<const SymbolIndex> w);

// |c(w_1, ~)| plus the codeword lengths of every symbol that repeats its
// predecessor. Requires an order-1 table.
std::uint64_t LNotHuffman(std::span<const SymbolIndex> w, const CodeTable& t);

// Entropy estimate for the symbols that differ from their predecessor.
// For each symbol s, with N(s) the number of such positions holding s and
// F_p(s) those among them preceded by p, each position holding s contributes
//   (1/N(s)) * sum over distinct predecessors p of F_p(s)(1 + log2(N(s)/F_p(s))).
double LHuffman(std::span<const SymbolIndex> w);

// LNotHuffman + LHuffman.
double HA(std::span<const SymbolIndex> w, const CodeTable& t);

// |Encode(t, w)| / |w|.
double RALiteral(std::span<const SymbolIndex> w, const CodeTable& t);

// Huffman totals published alongside the two reference strings
// "abbbcabccaabccabbcba" and "abbbccbccaabccaaacba"; nullopt for any other
// string.
std::optional<std::uint64_t> PublishedHuffmanBits(std::string_view text);

struct AnalysisReport {
  std::string id;
  std::size_t length = 0;
  PairStats stats;
  std::vector<std::size_t> eh;
  // Only for order-1 tables.
  std::optional<std::uint64_t> l_not_huffman;
  double l_huffman = 0;
  std::optional<double> h_a;
  std::uint64_t encoded_bits = 0;
  double r_a_literal = 0;
  double huffman_entropy = 0;
  double huffman_rate = 0;
  std::uint64_t huffman_total_bits = 0;
  // Set when a published total exists and differs from huffman_total_bits.
  std::optional<std::uint64_t> published_huffman_bits;
  // H_A <= R_A <= H_A + 1 taken literally (H_A in bits, R_A in bits/symbol).
  std::optional<bool> bound_literal_holds;
  // H_A <= |Encode(t, w)| <= H_A + 1 with both sides in bits.
  std::optional<bool> bound_total_holds;

  bool adaptive_wins() const { return encoded_bits < huffman_total_bits; }
};

AnalysisReport CompareReport(std::span<const SymbolIndex> w,
                             const CodeTable& t, std::string id = "");

// Multi-line "key: value" rendering of one report.
std::string RenderReport(const AnalysisReport& r);
// Aligned comparison table, one row per report, with footnotes for
// published-value deviations and a summary of where the adaptive code wins.
std::string RenderCompareTable(std::span<const AnalysisReport> reports);
// CSV with header string-id,length,nrpairs,prate,adaptive_bits,huffman_bits,
// H,R,LNotHuffman,LHuffman,H_A,R_A.
std::string RenderCsv(std::span<const AnalysisReport> reports);

}  // namespace adaptive

#endif  // ADAPTIVE_ANALYSIS_H_
