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

#ifndef ADAPTIVE_PREFIX_CODES_H_
#define ADAPTIVE_PREFIX_CODES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adaptive/core.h"

namespace adaptive {

using Rational = boost::multiprecision::cpp_rational;

// True iff the words are pairwise distinct and none is a proper prefix of
// another.
bool IsPrefixCode(std::span<const Codeword> words);

// Exact sum of 2^-length over `words`.
Rational KraftSum(std::span<const Codeword> words);

struct FrequencyEntry {
  SymbolIndex symbol;
  std::uint64_t frequency;
};
using FrequencyTable = std::vector<FrequencyEntry>;

// Codewords and lengths in the order of the input FrequencyTable entries.
struct HuffmanResult {
  std::vector<Codeword> codewords;
  std::vector<std::size_t> lengths;
};

// Deterministic Huffman code.
//
// The tree is built with the two-queue method: leaves are sorted by
// (frequency, symbol index) and internal nodes are queued in creation order;
// on equal weight the earlier-created node wins, and every leaf predates
// every internal node. Zero frequencies are ordinary (equal) weights.
//
// Only the resulting length multiset is kept. Codewords are then assigned
// canonically: in increasing (length, symbol index) order, each codeword is
// the lexicographic successor of the previous one. A single entry gets "0".
//
// Throws kInvalidArgument on an empty table or duplicate symbol indices.
HuffmanResult HuffmanBuild(const FrequencyTable& freqs);

// Sum of frequency * code length under HuffmanBuild.
std::uint64_t HuffmanTotalLength(const FrequencyTable& freqs);

// Canonical codewords for the given lengths, in the order of `lengths`;
// ties in length are resolved by position. Lengths must satisfy Kraft.
std::vector<Codeword> CanonicalCode(std::span<const std::size_t> lengths);

}  // namespace adaptive

#endif  // ADAPTIVE_PREFIX_CODES_H_
