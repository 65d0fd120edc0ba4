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

#include "adaptive/builder.h"

#include <vector>

#include "adaptive/prefix_codes.h"

namespace adaptive {

CodeTable BuildOrder1(const Alphabet& alphabet) {
  const std::size_t h = alphabet.size();
  if (h < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "Builder requires at least two symbols");
  }

  // x[i] is the codeword suffix for symbol i (i >= 1, 0-based); x[0] unused.
  std::vector<Bits> x(h);
  if (h > 2) {
    FrequencyTable zeros;
    for (std::size_t i = 1; i < h; ++i) {
      zeros.push_back({static_cast<SymbolIndex>(i), 0});
    }
    HuffmanResult huff = HuffmanBuild(zeros);
    for (std::size_t i = 1; i < h; ++i) x[i] = huff.codewords[i - 1].bits();
  }
  for (std::size_t i = 1; i < h; ++i) x[i].insert(x[i].begin(), true);

  const Codeword zero(Bits{false});
  CodeTable::Rows rows;
  for (std::size_t j = 0; j < h; ++j) {
    CodeTable::Row row;
    row.reserve(h);
    for (std::size_t i = 0; i < h; ++i) {
      if (i == j) {
        row.push_back(zero);
      } else if (i == 0) {
        row.emplace_back(x[j]);
      } else {
        row.emplace_back(x[i]);
      }
    }
    rows.emplace(Context{static_cast<SymbolIndex>(j)}, std::move(row));
  }
  CodeTable::Row start;
  start.push_back(zero);
  for (std::size_t i = 1; i < h; ++i) start.emplace_back(x[i]);
  rows.emplace(Context(), std::move(start));

  return CodeTable(alphabet, 1, std::move(rows));
}

}  // namespace adaptive
