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

#include "adaptive/core.h"

#include <algorithm>
#include <limits>
#include <sstream>

namespace adaptive {

Bits BitsFromString(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kInvalidArgument,
                  "invalid bit character '" + std::string(1, c) + "'");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

std::string BitsToString(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  index_.fill(-1);
  if (symbols_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty alphabet source");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (index_[symbols_[i]] >= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate alphabet symbol " +
                      std::to_string(static_cast<int>(symbols_[i])));
    }
    index_[symbols_[i]] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::FromBytes(std::span<const Symbol> data) {
  std::array<bool, 256> seen{};
  for (Symbol s : data) seen[s] = true;
  std::vector<Symbol> symbols;
  for (int s = 0; s < 256; ++s) {
    if (seen[s]) symbols.push_back(static_cast<Symbol>(s));
  }
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::FromBytes(std::string_view data) {
  return FromBytes(std::span(reinterpret_cast<const Symbol*>(data.data()),
                             data.size()));
}

Alphabet Alphabet::FromSymbols(std::span<const Symbol> symbols) {
  return Alphabet(std::vector<Symbol>(symbols.begin(), symbols.end()));
}

Alphabet Alphabet::FromSymbols(std::string_view symbols) {
  return FromSymbols(std::span(
      reinterpret_cast<const Symbol*>(symbols.data()), symbols.size()));
}

SymbolIndex Alphabet::index(Symbol s) const {
  if (index_[s] < 0) {
    throw Error(ErrorKind::kEncode,
                "symbol " + std::to_string(static_cast<int>(s)) +
                    " is not in the alphabet");
  }
  return static_cast<SymbolIndex>(index_[s]);
}

bool Alphabet::is_sorted() const {
  return std::adjacent_find(symbols_.begin(), symbols_.end(),
                            std::greater_equal<>()) == symbols_.end();
}

std::vector<SymbolIndex> Alphabet::ToIndices(
    std::span<const Symbol> data) const {
  std::vector<SymbolIndex> out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (index_[data[i]] < 0) {
      throw Error(ErrorKind::kEncode,
                  "symbol " + std::to_string(static_cast<int>(data[i])) +
                      " at offset " + std::to_string(i) +
                      " is not in the alphabet");
    }
    out.push_back(static_cast<SymbolIndex>(index_[data[i]]));
  }
  return out;
}

std::vector<SymbolIndex> Alphabet::ToIndices(std::string_view data) const {
  return ToIndices(std::span(reinterpret_cast<const Symbol*>(data.data()),
                             data.size()));
}

std::vector<Symbol> Alphabet::ToBytes(
    std::span<const SymbolIndex> indices) const {
  std::vector<Symbol> out;
  out.reserve(indices.size());
  for (SymbolIndex i : indices) out.push_back(symbols_.at(i));
  return out;
}

std::string Alphabet::ToString(std::span<const SymbolIndex> indices) const {
  std::string out;
  out.reserve(indices.size());
  for (SymbolIndex i : indices) out.push_back(static_cast<char>(symbols_.at(i)));
  return out;
}

Codeword::Codeword(Bits bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty codeword");
  }
}

Codeword Codeword::FromString(std::string_view text) {
  return Codeword(BitsFromString(text));
}

Codeword Codeword::Prepend(bool bit) const {
  Bits bits;
  bits.reserve(bits_.size() + 1);
  bits.push_back(bit);
  bits.insert(bits.end(), bits_.begin(), bits_.end());
  return Codeword(std::move(bits));
}

bool Codeword::MatchesAt(const Bits& bits, std::size_t offset) const {
  if (offset > bits.size() || bits.size() - offset < bits_.size()) {
    return false;
  }
  return std::equal(bits_.begin(), bits_.end(),
                    bits.begin() + static_cast<std::ptrdiff_t>(offset));
}

bool Codeword::IsPrefixOf(const Codeword& other) const {
  if (other.size() < size()) return false;
  return std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

Context Context::Advance(SymbolIndex s, std::size_t order) const {
  std::vector<SymbolIndex> next;
  next.reserve(order);
  auto first = symbols_.begin();
  if (symbols_.size() >= order) first += symbols_.size() - order + 1;
  next.assign(first, symbols_.end());
  next.push_back(s);
  return Context(std::move(next));
}

std::string Context::ToString(const Alphabet& alphabet) const {
  if (symbols_.empty()) return "~";
  return alphabet.ToString(symbols_);
}

Context ContextWindow(std::span<const SymbolIndex> u, std::size_t order) {
  if (u.size() <= order) return Context({u.begin(), u.end()});
  return Context({u.end() - static_cast<std::ptrdiff_t>(order), u.end()});
}

CodeTable::CodeTable(Alphabet alphabet, std::size_t order, Rows rows)
    : alphabet_(std::move(alphabet)), order_(order), rows_(std::move(rows)) {
  if (order_ < 1) {
    throw Error(ErrorKind::kInvalidArgument, "table order must be >= 1");
  }
  const std::size_t h = alphabet_.size();
  for (const auto& [ctx, row] : rows_) {
    if (ctx.size() > order_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "context longer than table order");
    }
    for (SymbolIndex s : ctx.symbols()) {
      if (s >= h) {
        throw Error(ErrorKind::kInvalidArgument,
                    "context symbol index out of range");
      }
    }
    if (row.size() != h) {
      throw Error(ErrorKind::kInvalidArgument,
                  "row for context " + ctx.ToString(alphabet_) + " has " +
                      std::to_string(row.size()) + " codewords, expected " +
                      std::to_string(h));
    }
  }
  if (!rows_.contains(Context())) {
    throw Error(ErrorKind::kInvalidArgument,
                "table has no row for the empty context");
  }
}

const CodeTable::Row* CodeTable::FindRow(const Context& ctx) const {
  auto it = rows_.find(ctx);
  return it == rows_.end() ? nullptr : &it->second;
}

const Codeword& CodeTable::Get(SymbolIndex symbol, const Context& ctx) const {
  const Row* row = FindRow(ctx);
  if (row == nullptr || symbol >= row->size()) {
    std::string sym = symbol < alphabet_.size()
                          ? std::string(1, static_cast<char>(
                                               alphabet_.symbol(symbol)))
                          : "#" + std::to_string(symbol);
    throw Error(ErrorKind::kEncode, "no codeword for (" + sym + ", " +
                                        ctx.ToString(alphabet_) + ")");
  }
  return (*row)[symbol];
}

bool CodeTable::IsTotal() const {
  return rows_.size() == CountContexts(alphabet_.size(), order_);
}

std::size_t CountContexts(std::size_t h, std::size_t order) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::size_t len = 0; len <= order; ++len) {
    if (total > kMax - power) return kMax;
    total += power;
    if (len < order) {
      if (h != 0 && power > kMax / h) return kMax;
      power *= h;
    }
  }
  return total;
}

}  // namespace adaptive
