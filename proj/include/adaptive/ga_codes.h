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

#ifndef ADAPTIVE_GA_CODES_H_
#define ADAPTIVE_GA_CODES_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "adaptive/core.h"

namespace adaptive {

// Rule choosing the coding context of position i (1-based) from the symbols
// strictly before it. Only causal rules are representable: the rule never
// sees position i or anything after it, which is what makes greedy decoding
// possible. Rules must be pure.
class AdaptiveFunction {
 public:
  using Rule = std::function<Context(std::size_t position,
                                     std::span<const SymbolIndex> prefix)>;

  explicit AdaptiveFunction(Rule rule,
                            std::optional<std::size_t> bound = std::nullopt)
      : rule_(std::move(rule)), bound_(bound) {}

  // `prefix` must hold exactly position - 1 symbols. Throws kInvalidArgument
  // if the rule exceeds its declared context-length bound.
  Context operator()(std::size_t position,
                     std::span<const SymbolIndex> prefix) const;

  std::optional<std::size_t> bound() const { return bound_; }

 private:
  Rule rule_;
  std::optional<std::size_t> bound_;
};

// The sliding window of an order-n adaptive code: empty at position 1, the
// whole prefix while it is at most n long, then its last n symbols.
AdaptiveFunction OrderNFunction(std::size_t n);

// A code whose context at each position is chosen by an AdaptiveFunction.
// The codeword lookup may be partial; rows are checked for the prefix
// property when a decode first visits them.
class GACode {
 public:
  using Lookup = std::map<Context, std::map<SymbolIndex, Codeword>>;

  GACode(Alphabet alphabet, AdaptiveFunction function, Lookup lookup);

  // Uses every row of `table` as the lookup.
  static GACode FromTable(const CodeTable& table, AdaptiveFunction function);

  const Alphabet& alphabet() const { return alphabet_; }
  const AdaptiveFunction& function() const { return function_; }
  const Lookup& lookup() const { return lookup_; }

  const Codeword* Find(SymbolIndex symbol, const Context& ctx) const;

 private:
  Alphabet alphabet_;
  AdaptiveFunction function_;
  Lookup lookup_;
};

// Throws kEncode naming the position and context of an undefined lookup.
Bits GAEncode(const GACode& code, std::span<const SymbolIndex> w);

// Greedy inverse of GAEncode. Throws kDecode on undecodable or truncated
// input and on a visited context whose codewords are not a prefix code.
std::vector<SymbolIndex> GADecode(const GACode& code, const Bits& u);

}  // namespace adaptive

#endif  // ADAPTIVE_GA_CODES_H_
