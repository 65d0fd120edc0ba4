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

#ifndef ADAPTIVE_CORE_H_
#define ADAPTIVE_CORE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adaptive {

// Broad failure classes. The CLI maps these onto exit codes.
enum class ErrorKind {
  kInvalidArgument,
  kEncode,
  kDecode,
  kParse,
  kFormat,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

using Symbol = std::uint8_t;
// Position of a symbol inside its Alphabet (0-based).
using SymbolIndex = std::uint16_t;
using Bits = std::vector<bool>;

// "0101" <-> {0,1,0,1}. Characters other than '0'/'1' are rejected.
Bits BitsFromString(std::string_view text);
std::string BitsToString(const Bits& bits);

// Ordered set of distinct byte symbols with index <-> symbol maps.
class Alphabet {
 public:
  // Distinct byte values of `data`, sorted ascending.
  static Alphabet FromBytes(std::span<const Symbol> data);
  static Alphabet FromBytes(std::string_view data);
  // Keeps the given order; symbols must be distinct.
  static Alphabet FromSymbols(std::span<const Symbol> symbols);
  static Alphabet FromSymbols(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  Symbol symbol(SymbolIndex i) const { return symbols_.at(i); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool contains(Symbol s) const { return index_[s] >= 0; }
  // Requires contains(s).
  SymbolIndex index(Symbol s) const;
  bool is_sorted() const;

  // Throws kEncode naming the offset of the first unknown byte.
  std::vector<SymbolIndex> ToIndices(std::span<const Symbol> data) const;
  std::vector<SymbolIndex> ToIndices(std::string_view data) const;
  std::vector<Symbol> ToBytes(std::span<const SymbolIndex> indices) const;
  std::string ToString(std::span<const SymbolIndex> indices) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  explicit Alphabet(std::vector<Symbol> symbols);

  std::vector<Symbol> symbols_;
  std::array<std::int16_t, 256> index_;
};

// A nonempty bit string.
class Codeword {
 public:
  explicit Codeword(Bits bits);
  static Codeword FromString(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  const Bits& bits() const { return bits_; }
  std::string ToString() const { return BitsToString(bits_); }

  // Returns a codeword with `bit` prepended.
  Codeword Prepend(bool bit) const;
  // True if the codeword occurs in `bits` starting at `offset`.
  bool MatchesAt(const Bits& bits, std::size_t offset) const;
  bool IsPrefixOf(const Codeword& other) const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend bool operator<(const Codeword& a, const Codeword& b) {
    return a.bits_ < b.bits_;
  }

 private:
  Bits bits_;
};

// A sequence of previous symbols selecting a row of a CodeTable. The empty
// context is the start-of-stream context.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<SymbolIndex> symbols)
      : symbols_(std::move(symbols)) {}
  Context(std::initializer_list<SymbolIndex> symbols) : symbols_(symbols) {}

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<SymbolIndex>& symbols() const { return symbols_; }

  // Sliding-window step: append `s`, dropping the oldest symbol once the
  // window already holds `order` symbols.
  Context Advance(SymbolIndex s, std::size_t order) const;

  // Renders the symbols through `alphabet`; the empty context prints as "~".
  std::string ToString(const Alphabet& alphabet) const;

  friend bool operator==(const Context&, const Context&) = default;
  // Shortlex: shorter contexts first, then lexicographic by symbol index.
  friend bool operator<(const Context& a, const Context& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.symbols_ < b.symbols_;
  }

 private:
  std::vector<SymbolIndex> symbols_;
};

// The last min(|u|, order) symbols of `u`.
Context ContextWindow(std::span<const SymbolIndex> u, std::size_t order);

// Immutable map from context to a row of per-symbol codewords. The empty
// context row is mandatory; other rows may be absent.
class CodeTable {
 public:
  using Row = std::vector<Codeword>;
  using Rows = std::map<Context, Row>;

  // Throws kInvalidArgument if order < 1, a context is longer than `order`,
  // a context mentions an unknown symbol index, a row has the wrong width,
  // or the empty-context row is missing.
  CodeTable(Alphabet alphabet, std::size_t order, Rows rows);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t order() const { return order_; }
  const Rows& rows() const { return rows_; }

  // nullptr when the table has no row for `ctx`.
  const Row* FindRow(const Context& ctx) const;
  // Throws kEncode "no codeword for (symbol, context)".
  const Codeword& Get(SymbolIndex symbol, const Context& ctx) const;

  // True when every context of length <= order has a row.
  bool IsTotal() const;

  friend bool operator==(const CodeTable&, const CodeTable&) = default;

 private:
  Alphabet alphabet_;
  std::size_t order_;
  Rows rows_;
};

// Number of contexts of length 0..order over `h` symbols, saturating at
// SIZE_MAX.
std::size_t CountContexts(std::size_t h, std::size_t order);

// Calls `fn(const Context&)` for every context of length 0..order in
// shortlex order.
template <typename Fn>
void ForEachContext(std::size_t h, std::size_t order, Fn&& fn) {
  std::vector<SymbolIndex> digits;
  for (std::size_t len = 0; len <= order; ++len) {
    digits.assign(len, 0);
    while (true) {
      fn(Context(digits));
      std::size_t pos = len;
      while (pos > 0 && digits[pos - 1] + 1u == h) {
        digits[--pos] = 0;
      }
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
}

}  // namespace adaptive

#endif  // ADAPTIVE_CORE_H_
