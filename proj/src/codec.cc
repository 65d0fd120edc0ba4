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

#include "adaptive/codec.h"

#include <limits>
#include <map>
#include <optional>

#include "adaptive/prefix_codes.h"
#include "row_trie.h"

namespace adaptive {

bool PrefixPredicate(const CodeTable& t) {
  for (const auto& [ctx, row] : t.rows()) {
    if (!IsPrefixCode(row)) return false;
  }
  return true;
}

std::vector<Context> NonPrefixContexts(const CodeTable& t) {
  std::vector<Context> out;
  for (const auto& [ctx, row] : t.rows()) {
    if (!IsPrefixCode(row)) out.push_back(ctx);
  }
  return out;
}

void AdaptiveEncoder::Put(SymbolIndex symbol, Bits& out) {
  const CodeTable::Row* row = table_->FindRow(last_);
  if (row == nullptr || symbol >= row->size()) {
    throw Error(ErrorKind::kEncode,
                "no codeword for symbol at position " +
                    std::to_string(position_ + 1) + " in context " +
                    last_.ToString(table_->alphabet()));
  }
  const Bits& bits = (*row)[symbol].bits();
  out.insert(out.end(), bits.begin(), bits.end());
  last_ = last_.Advance(symbol, table_->order());
  ++position_;
}

Bits Encode(const CodeTable& t, std::span<const SymbolIndex> w) {
  Bits out;
  AdaptiveEncoder encoder(t);
  for (SymbolIndex s : w) encoder.Put(s, out);
  return out;
}

namespace {

DecodeTrace DecodeImpl(const CodeTable& t, const Bits& u,
                       std::uint64_t max_symbols) {
  for (const auto& [ctx, row] : t.rows()) {
    if (!IsPrefixCode(row)) {
      throw Error(ErrorKind::kDecode,
                  "ambiguous table: row for context " +
                      ctx.ToString(t.alphabet()) + " is not a prefix code");
    }
  }

  // Tries are built on first visit to a context.
  std::map<const CodeTable::Row*, internal::RowTrie> tries;
  DecodeTrace trace;
  Context last;
  std::size_t i = 0;
  while (i < u.size() && trace.output.size() < max_symbols) {
    const CodeTable::Row* row = t.FindRow(last);
    if (row == nullptr) {
      throw Error(ErrorKind::kDecode,
                  "undecodable at bit offset " + std::to_string(i) +
                      ": no row for context " + last.ToString(t.alphabet()));
    }
    auto it = tries.find(row);
    if (it == tries.end()) {
      it = tries.emplace(row, *internal::RowTrie::Build(*row)).first;
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
    trace.output.push_back(m.symbol);
    ++trace.iterations;
    i += m.length;
    last = last.Advance(m.symbol, t.order());
  }
  if (max_symbols != std::numeric_limits<std::uint64_t>::max() &&
      trace.output.size() < max_symbols) {
    throw Error(ErrorKind::kDecode,
                "truncated input at bit offset " + std::to_string(i) +
                    ": decoded " + std::to_string(trace.output.size()) +
                    " of " + std::to_string(max_symbols) + " symbols");
  }
  trace.bits_consumed = i;
  return trace;
}

}  // namespace

DecodeTrace Decode(const CodeTable& t, const Bits& u) {
  return DecodeImpl(t, u, std::numeric_limits<std::uint64_t>::max());
}

DecodeTrace DecodeSymbols(const CodeTable& t, const Bits& u,
                          std::uint64_t count) {
  return DecodeImpl(t, u, count);
}

}  // namespace adaptive
