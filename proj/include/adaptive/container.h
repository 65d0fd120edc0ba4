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

#ifndef ADAPTIVE_CONTAINER_H_
#define ADAPTIVE_CONTAINER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adaptive/core.h"

namespace adaptive {

// Bits stored MSB-first, final byte zero-padded.
struct PackedBits {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bit_count = 0;

  friend bool operator==(const PackedBits&, const PackedBits&) = default;
};

PackedBits PackBits(const Bits& bits);
// Throws kFormat "truncated" if bit_count exceeds the stored bytes.
Bits UnpackBits(const PackedBits& packed);

// Encoded stream layout (integers big-endian):
//
//   "ADC1"            4 bytes magic
//   version           1 byte, 0x01
//   order n           1 byte
//   alphabet size h   2 bytes
//   alphabet          h bytes, strictly increasing
//   symbol count s    8 bytes
//   table mode        1 byte (TableMode)
//   [table]           mode 0x01 only: every context of length 0..n in
//                     shortlex order, each row h codewords, each codeword a
//                     length byte L (1..255) then ceil(L/8) MSB-first bytes
//   payload           packed bits of the s encoded symbols
enum class TableMode : std::uint8_t {
  // The table is BuildOrder1(alphabet); requires n = 1 and h >= 2.
  kBuilder = 0x00,
  kExplicit = 0x01,
};

inline constexpr std::string_view kContainerMagic = "ADC1";
inline constexpr std::uint8_t kContainerVersion = 0x01;

struct Container {
  CodeTable table;
  TableMode mode;
  std::uint64_t symbol_count;
  // Exactly the bits of the s encoded symbols.
  Bits payload;
};

// Throws kFormat if the alphabet is not strictly increasing, kBuilder is
// requested for a table that is not the Builder table, kExplicit is requested
// for a partial table or a codeword longer than 255 bits, or `payload` is not
// exactly the encoding of `symbol_count` symbols under `table`.
std::vector<std::uint8_t> WriteContainer(const CodeTable& table, TableMode mode,
                                         std::uint64_t symbol_count,
                                         const Bits& payload);

// Throws kFormat on header or table errors and kDecode if the payload does not
// decode to s symbols.
Container ReadContainer(std::span<const std::uint8_t> bytes);

// Text table format:
//
//   order <n>
//   alphabet <symbols>
//   <context> <symbol> <bits>     one line per cell
//
// "~" is the empty context. Bytes outside '!'..'}' and the characters '\',
// '#' and '~' are written as \xHH. Blank lines and lines starting with '#' are
// ignored on input.
std::string TableToText(const CodeTable& table);

// Throws kParse with a line number on malformed lines, unknown symbols,
// duplicate cells, incomplete rows or a missing empty-context row.
CodeTable TableFromText(std::string_view text);

}  // namespace adaptive

#endif  // ADAPTIVE_CONTAINER_H_
