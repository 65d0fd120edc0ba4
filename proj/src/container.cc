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

#include <map>
#include <optional>
#include <sstream>

#include "adaptive/builder.h"
#include "adaptive/codec.h"

namespace adaptive {
namespace {

Error FormatError(const std::string& message) {
  return Error(ErrorKind::kFormat, message);
}

void PutBigEndian(std::vector<std::uint8_t>& out, std::uint64_t value,
                  int bytes) {
  for (int i = bytes - 1; i >= 0; --i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::span<const std::uint8_t> Take(std::size_t n, const char* what) {
    if (bytes_.size() - pos_ < n) {
      throw FormatError(std::string("truncated container: missing ") + what);
    }
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint64_t BigEndian(int n, const char* what) {
    std::uint64_t v = 0;
    for (std::uint8_t b : Take(static_cast<std::size_t>(n), what)) {
      v = (v << 8) | b;
    }
    return v;
  }

  std::span<const std::uint8_t> Rest() const { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

PackedBits PackBits(const Bits& bits) {
  PackedBits p;
  p.bit_count = bits.size();
  p.bytes.assign((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) p.bytes[i / 8] |= static_cast<std::uint8_t>(0x80 >> (i % 8));
  }
  return p;
}

Bits UnpackBits(const PackedBits& packed) {
  if (packed.bit_count > 8 * static_cast<std::uint64_t>(packed.bytes.size())) {
    throw FormatError("truncated: " + std::to_string(packed.bit_count) +
                      " bits declared, " +
                      std::to_string(8 * packed.bytes.size()) + " stored");
  }
  Bits bits(packed.bit_count);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = (packed.bytes[i / 8] >> (7 - i % 8)) & 1;
  }
  return bits;
}

std::vector<std::uint8_t> WriteContainer(const CodeTable& table, TableMode mode,
                                         std::uint64_t symbol_count,
                                         const Bits& payload) {
  const Alphabet& alphabet = table.alphabet();
  if (!alphabet.is_sorted()) {
    throw FormatError("container alphabet must be strictly increasing");
  }
  if (table.order() > 255) throw FormatError("order does not fit in a byte");
  if (mode == TableMode::kBuilder) {
    if (table.order() != 1 || alphabet.size() < 2 ||
        !(table == BuildOrder1(alphabet))) {
      throw FormatError("builder mode requires the order-1 Builder table");
    }
  } else if (!table.IsTotal()) {
    throw FormatError("explicit table mode requires a total table");
  }
  DecodeTrace trace = DecodeSymbols(table, payload, symbol_count);
  if (trace.bits_consumed != payload.size()) {
    throw FormatError("payload has bits beyond the declared symbol count");
  }

  std::vector<std::uint8_t> out(kContainerMagic.begin(), kContainerMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(table.order()));
  PutBigEndian(out, alphabet.size(), 2);
  out.insert(out.end(), alphabet.symbols().begin(), alphabet.symbols().end());
  PutBigEndian(out, symbol_count, 8);
  out.push_back(static_cast<std::uint8_t>(mode));
  if (mode == TableMode::kExplicit) {
    for (const auto& [ctx, row] : table.rows()) {
      for (const Codeword& word : row) {
        if (word.size() > 255) {
          throw FormatError("codeword longer than 255 bits in context " +
                            ctx.ToString(alphabet));
        }
        out.push_back(static_cast<std::uint8_t>(word.size()));
        PackedBits packed = PackBits(word.bits());
        out.insert(out.end(), packed.bytes.begin(), packed.bytes.end());
      }
    }
  }
  PackedBits packed = PackBits(payload);
  out.insert(out.end(), packed.bytes.begin(), packed.bytes.end());
  return out;
}

Container ReadContainer(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  auto magic = in.Take(kContainerMagic.size(), "magic");
  if (!std::equal(magic.begin(), magic.end(), kContainerMagic.begin())) {
    throw FormatError("bad magic");
  }
  std::uint8_t version = in.Take(1, "version")[0];
  if (version != kContainerVersion) {
    throw FormatError("unsupported version " + std::to_string(version));
  }
  const std::size_t order = in.Take(1, "order")[0];
  const std::size_t h = in.BigEndian(2, "alphabet size");
  if (h < 1 || h > 256) {
    throw FormatError("alphabet size " + std::to_string(h) + " out of range");
  }
  auto symbols = in.Take(h, "alphabet");
  for (std::size_t i = 1; i < h; ++i) {
    if (symbols[i] <= symbols[i - 1]) {
      throw FormatError("non-increasing alphabet");
    }
  }
  Alphabet alphabet = Alphabet::FromSymbols(symbols);
  const std::uint64_t count = in.BigEndian(8, "symbol count");
  const std::uint8_t mode = in.Take(1, "table mode")[0];

  std::optional<CodeTable> table;
  if (mode == static_cast<std::uint8_t>(TableMode::kBuilder)) {
    if (order != 1 || h < 2) {
      throw FormatError(
          "builder mode requires order 1 and at least two symbols");
    }
    table.emplace(BuildOrder1(alphabet));
  } else if (mode == static_cast<std::uint8_t>(TableMode::kExplicit)) {
    if (order < 1) throw FormatError("order must be >= 1");
    CodeTable::Rows rows;
    ForEachContext(h, order, [&](const Context& ctx) {
      CodeTable::Row row;
      row.reserve(h);
      for (std::size_t s = 0; s < h; ++s) {
        const std::size_t len = in.Take(1, "codeword length")[0];
        if (len == 0) throw FormatError("codeword length 0");
        PackedBits packed;
        packed.bit_count = len;
        auto body = in.Take((len + 7) / 8, "codeword bits");
        packed.bytes.assign(body.begin(), body.end());
        if (PackBits(UnpackBits(packed)) != packed) {
          throw FormatError("nonzero codeword padding");
        }
        row.emplace_back(UnpackBits(packed));
      }
      rows.emplace(ctx, std::move(row));
    });
    table.emplace(alphabet, order, std::move(rows));
  } else {
    throw FormatError("unknown table mode " + std::to_string(mode));
  }

  auto rest = in.Rest();
  PackedBits packed;
  packed.bytes.assign(rest.begin(), rest.end());
  packed.bit_count = 8 * static_cast<std::uint64_t>(rest.size());
  Bits bits = UnpackBits(packed);
  DecodeTrace trace = DecodeSymbols(*table, bits, count);
  const std::size_t used = trace.bits_consumed;
  if ((used + 7) / 8 != rest.size()) {
    throw FormatError("trailing garbage after payload");
  }
  for (std::size_t i = used; i < bits.size(); ++i) {
    if (bits[i]) throw FormatError("nonzero payload padding");
  }
  bits.resize(used);
  return Container{std::move(*table), static_cast<TableMode>(mode), count,
                   std::move(bits)};
}

namespace {

std::string EscapeSymbol(Symbol s) {
  if (s >= '!' && s <= '}' && s != '\\' && s != '#') {
    return std::string(1, static_cast<char>(s));
  }
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("\\x") + kHex[s >> 4] + kHex[s & 15];
}

// nullopt on a malformed escape.
std::optional<std::vector<Symbol>> Unescape(std::string_view token) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] != '\\') {
      out.push_back(static_cast<Symbol>(token[i]));
      continue;
    }
    if (i + 3 >= token.size()) return std::nullopt;
    if (token[i + 1] != 'x') return std::nullopt;
    int value = 0;
    for (std::size_t k = i + 2; k < i + 4; ++k) {
      char c = token[k];
      int digit;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        digit = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        digit = c - 'A' + 10;
      } else {
        return std::nullopt;
      }
      value = value * 16 + digit;
    }
    out.push_back(static_cast<Symbol>(value));
    i += 3;
  }
  return out;
}

Error ParseError(std::size_t line, const std::string& message) {
  return Error(ErrorKind::kParse,
               "line " + std::to_string(line) + ": " + message);
}

}  // namespace

std::string TableToText(const CodeTable& table) {
  const Alphabet& alphabet = table.alphabet();
  std::ostringstream os;
  os << "order " << table.order() << "\n";
  os << "alphabet ";
  for (Symbol s : alphabet.symbols()) os << EscapeSymbol(s);
  os << "\n";
  for (const auto& [ctx, row] : table.rows()) {
    std::string ctx_text;
    if (ctx.empty()) {
      ctx_text = "~";
    } else {
      for (SymbolIndex s : ctx.symbols()) {
        ctx_text += EscapeSymbol(alphabet.symbol(s));
      }
    }
    for (std::size_t s = 0; s < row.size(); ++s) {
      os << ctx_text << " "
         << EscapeSymbol(alphabet.symbol(static_cast<SymbolIndex>(s))) << " "
         << row[s].ToString() << "\n";
    }
  }
  return os.str();
}

CodeTable TableFromText(std::string_view text) {
  std::optional<std::size_t> order;
  std::optional<Alphabet> alphabet;
  // Cells per context, plus the line where the context first appeared.
  std::map<Context, std::map<SymbolIndex, Codeword>> cells;
  std::map<Context, std::size_t> first_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (!order) {
      if (tokens.size() != 2 || tokens[0] != "order") {
        throw ParseError(line_no, "expected 'order <n>'");
      }
      std::size_t n = 0;
      for (char c : tokens[1]) {
        if (c < '0' || c > '9' || n > 1000000) {
          throw ParseError(line_no, "invalid order '" + tokens[1] + "'");
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      if (n < 1) throw ParseError(line_no, "order must be >= 1");
      order = n;
      continue;
    }
    if (!alphabet) {
      if (tokens.size() != 2 || tokens[0] != "alphabet") {
        throw ParseError(line_no, "expected 'alphabet <symbols>'");
      }
      auto symbols = Unescape(tokens[1]);
      if (!symbols) throw ParseError(line_no, "malformed escape in alphabet");
      try {
        alphabet = Alphabet::FromSymbols(*symbols);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected '<context> <symbol> <bits>'");
    }
    Context ctx;
    if (tokens[0] != "~") {
      auto ctx_bytes = Unescape(tokens[0]);
      if (!ctx_bytes) throw ParseError(line_no, "malformed escape in context");
      std::vector<SymbolIndex> indices;
      for (Symbol s : *ctx_bytes) {
        if (!alphabet->contains(s)) {
          throw ParseError(line_no, "unknown symbol in context '" +
                                        tokens[0] + "'");
        }
        indices.push_back(alphabet->index(s));
      }
      if (indices.size() > *order) {
        throw ParseError(line_no, "context '" + tokens[0] +
                                      "' is longer than the table order");
      }
      ctx = Context(std::move(indices));
    }
    auto sym = Unescape(tokens[1]);
    if (!sym || sym->size() != 1) {
      throw ParseError(line_no, "expected a single symbol, got '" +
                                    tokens[1] + "'");
    }
    if (!alphabet->contains((*sym)[0])) {
      throw ParseError(line_no, "unknown symbol '" + tokens[1] + "'");
    }
    Bits bits;
    try {
      bits = BitsFromString(tokens[2]);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (bits.empty()) throw ParseError(line_no, "empty bit field");
    first_line.emplace(ctx, line_no);
    auto [it, inserted] =
        cells[ctx].emplace(alphabet->index((*sym)[0]), Codeword(bits));
    if (!inserted) {
      throw ParseError(line_no, "duplicate cell (" + tokens[0] + ", " +
                                    tokens[1] + ")");
    }
  }

  if (!order) throw ParseError(line_no, "missing 'order' header");
  if (!alphabet) throw ParseError(line_no, "missing 'alphabet' header");

  CodeTable::Rows rows;
  for (auto& [ctx, row_cells] : cells) {
    if (row_cells.size() != alphabet->size()) {
      throw ParseError(first_line[ctx], "row for context " +
                                            ctx.ToString(*alphabet) +
                                            " is incomplete");
    }
    CodeTable::Row row;
    for (auto& [s, word] : row_cells) row.push_back(std::move(word));
    rows.emplace(ctx, std::move(row));
  }
  if (!rows.contains(Context())) {
    throw ParseError(line_no, "table has no row for the empty context '~'");
  }
  return CodeTable(std::move(*alphabet), *order, std::move(rows));
}

}  // namespace adaptive
