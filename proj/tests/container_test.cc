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

#include "adaptive/container.h"

#include <random>

#include "adaptive/builder.h"
#include "adaptive/codec.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace adaptive {
namespace {

using testing::Indices;
using Bytes = std::vector<std::uint8_t>;

std::string ErrorOf(const Bytes& bytes) {
  try {
    ReadContainer(bytes);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(PackBitsTest, Examples) {
  PackedBits p = PackBits(BitsFromString("0101"));
  EXPECT_EQ(p.bytes, Bytes{0x50});
  EXPECT_EQ(p.bit_count, 4u);

  PackedBits empty = PackBits({});
  EXPECT_TRUE(empty.bytes.empty());
  EXPECT_EQ(empty.bit_count, 0u);

  PackedBits nine = PackBits(BitsFromString("111111111"));
  EXPECT_EQ(nine.bytes, (Bytes{0xFF, 0x80}));
  EXPECT_EQ(nine.bit_count, 9u);
}

TEST(PackBitsTest, UnpackTruncated) {
  PackedBits p{{0xFF}, 9};
  try {
    UnpackBits(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFormat);
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
  }
}

TEST(PackBitsTest, InverseProperty) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    Bits bits(rng() % 300);
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng() & 1;
    PackedBits p = PackBits(bits);
    EXPECT_EQ(p.bytes.size(), (bits.size() + 7) / 8);
    EXPECT_EQ(UnpackBits(p), bits);
  }
}

TEST(ContainerTest, BuilderModeLayout) {
  CodeTable t = BuildOrder1(Alphabet::FromBytes("abc"));
  auto w = Indices("abaa");
  Bits payload = Encode(t, w);
  EXPECT_EQ(BitsToString(payload), "010100");
  Bytes bytes = WriteContainer(t, TableMode::kBuilder, w.size(), payload);
  Bytes expected = {'A', 'D', 'C', '1', 0x01, 0x01, 0x00, 0x03, 'a', 'b', 'c',
                    0, 0, 0, 0, 0, 0, 0, 4, 0x00, 0x50};
  EXPECT_EQ(bytes, expected);

  Container c = ReadContainer(bytes);
  EXPECT_EQ(c.table, t);
  EXPECT_EQ(c.mode, TableMode::kBuilder);
  EXPECT_EQ(c.symbol_count, 4u);
  EXPECT_EQ(c.payload, payload);
}

TEST(ContainerTest, ExplicitModeSerializesRows) {
  CodeTable t = testing::Order2Table();
  Bits payload = Encode(t, Indices("abaa"));
  Bytes bytes = WriteContainer(t, TableMode::kExplicit, 4, payload);
  // Header is 4+1+1+2+2+8+1 = 19 bytes; 14 one-bit cells take 2 bytes each.
  ASSERT_EQ(bytes.size(), 19u + 28u + 1u);
  EXPECT_EQ(bytes[18], 0x01);
  EXPECT_EQ(bytes[19], 1);     // ~ a: length 1
  EXPECT_EQ(bytes[20], 0x00);  //      bit 0
  EXPECT_EQ(bytes[21], 1);     // ~ b
  EXPECT_EQ(bytes[22], 0x80);
  EXPECT_EQ(bytes.back(), 0x50);
  Container c = ReadContainer(bytes);
  EXPECT_EQ(c.table, t);
  EXPECT_EQ(Decode(c.table, c.payload).output, Indices("abaa"));
}

TEST(ContainerTest, BuilderAndExplicitDecodeAlike) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t h = 2 + rng() % 6;
    std::string symbols;
    for (std::size_t i = 0; i < h; ++i) symbols.push_back(static_cast<char>('a' + i));
    CodeTable t = BuildOrder1(Alphabet::FromBytes(symbols));
    auto w = testing::RandomString(h, rng() % 50, rng);
    Bits payload = Encode(t, w);
    Container a = ReadContainer(WriteContainer(t, TableMode::kBuilder, w.size(), payload));
    Container b = ReadContainer(WriteContainer(t, TableMode::kExplicit, w.size(), payload));
    EXPECT_EQ(a.table, b.table);
    EXPECT_EQ(Decode(a.table, a.payload).output, w);
    EXPECT_EQ(Decode(b.table, b.payload).output, w);
  }
}

TEST(ContainerTest, WriteReadRewriteProperty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    CodeTable t = testing::RandomPrefixTable(2 + rng() % 4, 1 + rng() % 2, rng);
    auto w = testing::RandomString(t.alphabet().size(), rng() % 100, rng);
    Bytes bytes = WriteContainer(t, TableMode::kExplicit, w.size(), Encode(t, w));
    Container c = ReadContainer(bytes);
    EXPECT_EQ(c.table, t);
    EXPECT_EQ(WriteContainer(c.table, c.mode, c.symbol_count, c.payload), bytes);
  }
}

TEST(ContainerTest, WriteRejects) {
  CodeTable builder = BuildOrder1(Alphabet::FromBytes("abc"));
  // Builder mode needs the Builder table.
  EXPECT_THROW(WriteContainer(testing::Order2Table(), TableMode::kBuilder, 0, {}),
               Error);
  // Payload must be exactly the declared symbols.
  EXPECT_THROW(WriteContainer(builder, TableMode::kBuilder, 1, BitsFromString("00")),
               Error);
  CodeTable partial = TableFromText("order 1\nalphabet ab\n~ a 0\n~ b 1\n");
  EXPECT_THROW(WriteContainer(partial, TableMode::kExplicit, 0, {}), Error);
  CodeTable unsorted =
      TableFromText("order 1\nalphabet ba\n~ a 0\n~ b 1\na a 0\na b 1\nb a 0\nb b 1\n");
  EXPECT_THROW(WriteContainer(unsorted, TableMode::kExplicit, 0, {}), Error);
}

TEST(ContainerTest, ReadErrorsAreDistinct) {
  CodeTable t = BuildOrder1(Alphabet::FromBytes("abc"));
  const Bytes good = WriteContainer(t, TableMode::kBuilder, 4, Encode(t, Indices("abaa")));

  Bytes magic = good;
  std::copy_n("XXXX", 4, magic.begin());
  EXPECT_EQ(ErrorOf(magic), "bad magic");

  Bytes version = good;
  version[4] = 2;
  EXPECT_EQ(ErrorOf(version), "unsupported version 2");

  Bytes alphabet = good;
  alphabet[9] = 'a';
  EXPECT_EQ(ErrorOf(alphabet), "non-increasing alphabet");

  Bytes garbage = good;
  garbage.push_back(0);
  EXPECT_EQ(ErrorOf(garbage), "trailing garbage after payload");

  Bytes padding = good;
  padding.back() |= 0x01;
  EXPECT_EQ(ErrorOf(padding), "nonzero payload padding");

  Bytes mode = good;
  mode[19] = 7;
  EXPECT_EQ(ErrorOf(mode), "unknown table mode 7");

  Bytes short_header(good.begin(), good.begin() + 10);
  EXPECT_NE(ErrorOf(short_header).find("truncated container"), std::string::npos);

  Bytes explicit_bytes = WriteContainer(testing::Order2Table(), TableMode::kExplicit,
                                        4, BitsFromString("0101"));
  explicit_bytes[19] = 0;
  EXPECT_EQ(ErrorOf(explicit_bytes), "codeword length 0");

  Bytes too_many = good;
  too_many[18] = 9;  // claims 9 symbols
  try {
    ReadContainer(too_many);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDecode);
  }
}

TEST(TableTextTest, Order2Fixture) {
  CodeTable t = testing::Order2Table();
  std::string text = TableToText(t);
  std::size_t cells = std::count(text.begin(), text.end(), '\n') - 2;
  EXPECT_EQ(cells, 14u);
  EXPECT_NE(text.find("\nba a 1\n"), std::string::npos);
  EXPECT_EQ(TableFromText(text), t);
}

TEST(TableTextTest, NonPrefixFixtureRoundTrips) {
  CodeTable t = testing::NonPrefixTable();
  EXPECT_EQ(TableFromText(TableToText(t)), t);
  EXPECT_FALSE(PrefixPredicate(TableFromText(TableToText(t))));
}

TEST(TableTextTest, MinimalPartialTable) {
  CodeTable t = TableFromText("order 1\nalphabet a\n~ a 0\n");
  EXPECT_EQ(t.rows().size(), 1u);
  EXPECT_FALSE(t.IsTotal());
}

TEST(TableTextTest, CommentsOrderingAndEscapes) {
  CodeTable t = TableFromText(
      "# comment\n\norder 1\r\nalphabet \\x00\\x20~\n"
      "\\x00 \\x20 10\n~ \\x00 0\n~ \\x20 10\n~ \\x7e 11\n"
      "\\x00 \\x00 0\n\\x00 \\x7E 11\n");
  EXPECT_EQ(t.alphabet().symbols(), (std::vector<Symbol>{0, ' ', '~'}));
  EXPECT_EQ(t.rows().size(), 2u);
  EXPECT_EQ(TableFromText(TableToText(t)), t);
  EXPECT_NE(TableToText(t).find("alphabet \\x00\\x20\\x7e\n"), std::string::npos);
}

TEST(TableTextTest, ArbitraryBytesRoundTrip) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 50; ++trial) {
    std::string bytes;
    for (int i = 0; i < 40; ++i) bytes.push_back(static_cast<char>(rng() % 256));
    Alphabet a = Alphabet::FromBytes(bytes);
    if (a.size() < 2) continue;
    CodeTable t = BuildOrder1(a);
    EXPECT_EQ(TableFromText(TableToText(t)), t);
  }
}

std::string ParseErrorOf(std::string_view text) {
  try {
    TableFromText(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    return e.what();
  }
  return "";
}

TEST(TableTextTest, ParseErrors) {
  EXPECT_NE(ParseErrorOf("").find("missing 'order'"), std::string::npos);
  EXPECT_EQ(ParseErrorOf("alphabet ab\n"), "line 1: expected 'order <n>'");
  EXPECT_EQ(ParseErrorOf("order 0\n"), "line 1: order must be >= 1");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\n~ c 0\n"),
            "line 3: unknown symbol 'c'");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\nc a 0\n"),
            "line 3: unknown symbol in context 'c'");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\n~ a 0\n~ a 1\n"),
            "line 4: duplicate cell (~, a)");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\n~ a\n"),
            "line 3: expected '<context> <symbol> <bits>'");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\n~ a 2\n"),
            "line 3: invalid bit character '2'");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\n~ a 0\n"),
            "line 3: row for context ~ is incomplete");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\naa a 0\n"),
            "line 3: context 'aa' is longer than the table order");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\na a 0\na b 1\n"),
            "line 4: table has no row for the empty context '~'");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet ab\n~ ab 0\n"),
            "line 3: expected a single symbol, got 'ab'");
  EXPECT_EQ(ParseErrorOf("order 1\nalphabet aa\n"),
            "line 2: duplicate alphabet symbol 97");
}

}  // namespace
}  // namespace adaptive
