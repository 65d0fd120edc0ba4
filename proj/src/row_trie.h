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

#ifndef ADAPTIVE_SRC_ROW_TRIE_H_
#define ADAPTIVE_SRC_ROW_TRIE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "adaptive/core.h"

namespace adaptive::internal {

// Binary trie over the codewords of one context row. Walking it consumes one
// bit per edge, so matching the next codeword costs O(codeword length).
class RowTrie {
 public:
  // Returns nullopt if the codewords do not form a prefix code. `present`
  // selects which symbols of the row take part (all when empty).
  static std::optional<RowTrie> Build(std::span<const Codeword> row,
                                      const std::vector<bool>& present = {});

  enum class Status { kMatch, kNoMatch, kTruncated };
  struct Match {
    Status status;
    SymbolIndex symbol = 0;
    // Bits consumed on kMatch; bits examined before failure otherwise.
    std::size_t length = 0;
  };

  Match Walk(const Bits& bits, std::size_t offset) const;

 private:
  struct Node {
    std::array<int, 2> child = {-1, -1};
    int symbol = -1;
  };
  std::vector<Node> nodes_;
};

}  // namespace adaptive::internal

#endif  // ADAPTIVE_SRC_ROW_TRIE_H_
