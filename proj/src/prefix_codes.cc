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

#include "adaptive/prefix_codes.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace adaptive {

bool IsPrefixCode(std::span<const Codeword> words) {
  std::vector<const Codeword*> sorted;
  sorted.reserve(words.size());
  for (const Codeword& w : words) sorted.push_back(&w);
  std::sort(sorted.begin(), sorted.end(),
            [](const Codeword* a, const Codeword* b) { return *a < *b; });
  // In lexicographic order a word that prefixes another also prefixes its
  // immediate successor.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1]->IsPrefixOf(*sorted[i])) return false;
  }
  return true;
}

Rational KraftSum(std::span<const Codeword> words) {
  Rational sum = 0;
  for (const Codeword& w : words) {
    boost::multiprecision::cpp_int denom = 1;
    denom <<= static_cast<unsigned>(w.size());
    sum += Rational(1, denom);
  }
  return sum;
}

namespace {

struct Node {
  std::uint64_t weight;
  int left = -1;
  int right = -1;
};

std::vector<std::size_t> HuffmanLengths(const FrequencyTable& freqs) {
  const std::size_t n = freqs.size();
  if (n == 1) return {1};

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (freqs[a].frequency != freqs[b].frequency) {
      return freqs[a].frequency < freqs[b].frequency;
    }
    return freqs[a].symbol < freqs[b].symbol;
  });

  // Nodes 0..n-1 are leaves in entry order; internal nodes follow.
  std::vector<Node> nodes;
  nodes.reserve(2 * n - 1);
  for (const FrequencyEntry& e : freqs) nodes.push_back({e.frequency});

  std::deque<int> leaves(order.begin(), order.end());
  std::deque<int> internal;
  auto pop_min = [&]() {
    bool take_leaf =
        !leaves.empty() &&
        (internal.empty() ||
         nodes[leaves.front()].weight <= nodes[internal.front()].weight);
    std::deque<int>& q = take_leaf ? leaves : internal;
    int id = q.front();
    q.pop_front();
    return id;
  };
  while (leaves.size() + internal.size() > 1) {
    int a = pop_min();
    int b = pop_min();
    nodes.push_back({nodes[a].weight + nodes[b].weight, a, b});
    internal.push_back(static_cast<int>(nodes.size() - 1));
  }

  std::vector<std::size_t> lengths(n, 0);
  std::vector<std::pair<int, std::size_t>> stack = {
      {static_cast<int>(nodes.size() - 1), 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    if (nodes[id].left < 0) {
      lengths[id] = depth;
    } else {
      stack.push_back({nodes[id].left, depth + 1});
      stack.push_back({nodes[id].right, depth + 1});
    }
  }
  return lengths;
}

}  // namespace

std::vector<Codeword> CanonicalCode(std::span<const std::size_t> lengths) {
  std::vector<std::size_t> order(lengths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return lengths[a] < lengths[b];
                   });

  std::vector<Bits> words(lengths.size());
  Bits code;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t len = lengths[order[k]];
    if (len == 0) {
      throw Error(ErrorKind::kInvalidArgument, "zero codeword length");
    }
    if (k > 0) {
      // Increment as a binary number; overflow means Kraft was violated.
      std::size_t i = code.size();
      while (i > 0 && code[i - 1]) code[--i] = false;
      if (i == 0) {
        throw Error(ErrorKind::kInvalidArgument,
                    "lengths violate the Kraft inequality");
      }
      code[i - 1] = true;
    }
    code.resize(len, false);
    words[order[k]] = code;
  }

  std::vector<Codeword> out;
  out.reserve(words.size());
  for (Bits& w : words) out.emplace_back(std::move(w));
  return out;
}

HuffmanResult HuffmanBuild(const FrequencyTable& freqs) {
  if (freqs.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty frequency table");
  }
  std::set<SymbolIndex> seen;
  for (const FrequencyEntry& e : freqs) {
    if (!seen.insert(e.symbol).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate symbol in frequency table");
    }
  }

  std::vector<std::size_t> lengths = HuffmanLengths(freqs);

  // Canonical assignment is by (length, symbol index), so feed the entries
  // to CanonicalCode in symbol order.
  std::vector<std::size_t> by_symbol(freqs.size());
  std::iota(by_symbol.begin(), by_symbol.end(), 0);
  std::sort(by_symbol.begin(), by_symbol.end(),
            [&](std::size_t a, std::size_t b) {
              return freqs[a].symbol < freqs[b].symbol;
            });
  std::vector<std::size_t> sorted_lengths;
  for (std::size_t i : by_symbol) sorted_lengths.push_back(lengths[i]);
  std::vector<Codeword> sorted_words = CanonicalCode(sorted_lengths);

  HuffmanResult result;
  result.lengths = lengths;
  result.codewords.assign(freqs.size(), Codeword(Bits{false}));
  for (std::size_t k = 0; k < by_symbol.size(); ++k) {
    result.codewords[by_symbol[k]] = sorted_words[k];
  }
  return result;
}

std::uint64_t HuffmanTotalLength(const FrequencyTable& freqs) {
  HuffmanResult r = HuffmanBuild(freqs);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    total += freqs[i].frequency * r.lengths[i];
  }
  return total;
}

}  // namespace adaptive
