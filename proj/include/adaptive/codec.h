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

#ifndef ADAPTIVE_CODEC_H_
#define ADAPTIVE_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "adaptive/core.h"

namespace adaptive {

// True iff every row present in `t` is a prefix code. For a total table this
// is the full sufficient condition for unique decodability.
bool PrefixPredicate(const CodeTable& t);

// Contexts whose rows are not prefix codes, in shortlex order.
std::vector<Context> NonPrefixContexts(const CodeTable& t);

// Incremental encoder: symbol i is coded in the context of the previous
// min(i - 1, order) symbols.
class AdaptiveEncoder {
 public:
  explicit AdaptiveEncoder(const CodeTable& table) : table_(&table) {}

  // Appends the codeword of `symbol` to `out`. Throws kEncode naming the
  // position and context if the table has no codeword for it.
  void Put(SymbolIndex symbol, Bits& out);

  std::size_t position() const { return position_; }
  const Context& context() const { return last_; }

 private:
  const CodeTable* table_;
  Context last_;
  std::size_t position_ = 0;
};

Bits Encode(const CodeTable& t, std::span<const SymbolIndex> w);

struct DecodeTrace {
  std::vector<SymbolIndex> output;
  // Passes through the decoding loop; always equals output.size().
  std::size_t iterations = 0;
  std::size_t bits_consumed = 0;
};

// Greedy decoder. Refuses tables whose rows are not all prefix codes. Throws
// kDecode with "undecodable at bit offset k", "truncated input at bit offset
// k" or "ambiguous table".
DecodeTrace Decode(const CodeTable& t, const Bits& u);

// Decodes exactly `count` symbols from the front of `u`, leaving any trailing
// bits unread (see DecodeTrace::bits_consumed).
DecodeTrace DecodeSymbols(const CodeTable& t, const Bits& u,
                          std::uint64_t count);

}  // namespace adaptive

#endif  // ADAPTIVE_CODEC_H_
