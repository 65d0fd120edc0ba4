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

#include "adaptive/ga_codes.h"

#include "row_trie.h"

namespace adaptive {

Context AdaptiveFunction::operator()(
    std::size_t position, std::span<const SymbolIndex> prefix) const {
  if (position < 1 || prefix.size() != position - 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "adaptive function called with a prefix that does not end "
                "just before the position");
  }
  Context ctx = rule_(position, prefix);
  if (bound_ && ctx.size() > *bound_) {
    throw Error(ErrorKind::kInvalidArgument,
                "adaptive function exceeded its context-length bound at "
                "position " +
                    std::to_string(position));
  }
  return ctx;
}

AdaptiveFunction OrderNFunction(std::size_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "order must be >= 1");
  }
  return AdaptiveFunction(
      [n](std::size_t, std::span<const SymbolIndex> prefix) {
        return ContextWindow(prefix, n);
      },
      n);
}

GACode::GACode(Alphabet alphabet, AdaptiveFunction function, Lookup lookup)
    : alphabet_(std::move(alphabet)),
      function_(std::move(function)),
      lookup_(std::move(lookup)) {
  for (const auto& [ctx, row] : lookup_) {
    for (SymbolIndex s : ctx.symbols()) {
      if (s >= alphabet_.size()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "context symbol index out of range");
      }
    }
    for (const auto& [s, word] : row) {
      if (s >= alphabet_.size()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "lookup symbol index out of range");
      }
    }
  }
}

GACode GACode::FromTable(const CodeTable& table, AdaptiveFunction function) {
  Lookup lookup;
  for (const auto& [ctx, row] : table.rows()) {
    auto& out = lookup[ctx];
    for (std::size_t s = 0; s < row.size(); ++s) {
      out.emplace(static_cast<SymbolIndex>(s), row[s]);
    }
  }
  return GACode(table.alphabet(), std::move(function), std::move(lookup));
}

const Codeword* GACode::Find(SymbolIndex symbol, const Context& ctx) const {
  auto row = lookup_.find(ctx);
  if (row == lookup_.end()) return nullptr;
  auto cell = row->second.find(symbol);
  return cell == row->second.end() ? nullptr : &cell->second;
}

Bits GAEncode(const GACode& code, std::span<const SymbolIndex> w) {
  Bits out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Context ctx = code.function()(i + 1, w.first(i));
    const Codeword* word = code.Find(w[i], ctx);
    if (word == nullptr) {
      throw Error(ErrorKind::kEncode,
                  "no codeword for symbol at position " +
                      std::to_string(i + 1) + " in context " +
                      ctx.ToString(code.alphabet()));
    }
    out.insert(out.end(), word->bits().begin(), word->bits().end());
  }
  return out;
}

std::vector<SymbolIndex> GADecode(const GACode& code, const Bits& u) {
  const std::size_t h = code.alphabet().size();
  std::map<Context, internal::RowTrie> tries;
  std::vector<SymbolIndex> out;
  std::size_t i = 0;
  while (i < u.size()) {
    Context ctx = code.function()(out.size() + 1, out);
    auto it = tries.find(ctx);
    if (it == tries.end()) {
      auto row = code.lookup().find(ctx);
      if (row == code.lookup().end()) {
        throw Error(ErrorKind::kDecode,
                    "undecodable at bit offset " + std::to_string(i) +
                        ": no codewords for context " +
                        ctx.ToString(code.alphabet()));
      }
      std::vector<Codeword> words(h, Codeword(Bits{false}));
      std::vector<bool> present(h, false);
      for (const auto& [s, word] : row->second) {
        words[s] = word;
        present[s] = true;
      }
      auto trie = internal::RowTrie::Build(words, present);
      if (!trie) {
        throw Error(ErrorKind::kDecode, "non-prefix row at visited context " +
                                            ctx.ToString(code.alphabet()));
      }
      it = tries.emplace(ctx, std::move(*trie)).first;
    }
    internal::RowTrie::Match m = it->second.Walk(u, i);
    if (m.status == internal::RowTrie::Status::kNoMatch) {
      throw Error(ErrorKind::kDecode,
                  "undecodable at bit offset " + std::to_string(i));
    }
    if (m.status == internal::RowTrie::Status::kTruncated) {
      throw Error(ErrorKind::kDecode,
                  "truncated input at bit offset " + std::to_string(i));
    }
    out.push_back(m.symbol);
    i += m.length;
  }
  return out;
}

}  // namespace adaptive
