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

#include "row_trie.h"

namespace adaptive::internal {

std::optional<RowTrie> RowTrie::Build(std::span<const Codeword> row,
                                      const std::vector<bool>& present) {
  RowTrie trie;
  trie.nodes_.emplace_back();
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (!present.empty() && !present[s]) continue;
    int node = 0;
    for (std::size_t i = 0; i < row[s].size(); ++i) {
      if (trie.nodes_[node].symbol >= 0) return std::nullopt;
      int& next = trie.nodes_[node].child[row[s][i]];
      if (next < 0) {
        next = static_cast<int>(trie.nodes_.size());
        trie.nodes_.emplace_back();
      }
      node = trie.nodes_[node].child[row[s][i]];
    }
    const Node& end = trie.nodes_[node];
    if (end.symbol >= 0 || end.child[0] >= 0 || end.child[1] >= 0) {
      return std::nullopt;
    }
    trie.nodes_[node].symbol = static_cast<int>(s);
  }
  return trie;
}

RowTrie::Match RowTrie::Walk(const Bits& bits, std::size_t offset) const {
  int node = 0;
  std::size_t pos = offset;
  while (nodes_[node].symbol < 0) {
    if (pos >= bits.size()) {
      return {Status::kTruncated, 0, pos - offset};
    }
    int next = nodes_[node].child[bits[pos]];
    if (next < 0) return {Status::kNoMatch, 0, pos - offset};
    node = next;
    ++pos;
  }
  return {Status::kMatch, static_cast<SymbolIndex>(nodes_[node].symbol),
          pos - offset};
}

}  // namespace adaptive::internal
