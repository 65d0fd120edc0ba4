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

#include "adaptive/cli.h"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "adaptive/analysis.h"
#include "adaptive/builder.h"
#include "adaptive/codec.h"
#include "adaptive/container.h"
#include "adaptive/core.h"

namespace adaptive::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  std::string table_path;
  bool builder = false;
  std::string alphabet;
  std::string corpus_path;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string Read(const std::string& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
  }

  void Write(const std::string& path, std::string_view data) {
    if (path.empty() || path == "-") {
      out_.write(data.data(), static_cast<std::streamsize>(data.size()));
      out_.flush();
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!file) throw UsageError("error writing '" + path + "'");
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

int ExitFor(ErrorKind kind, int format_code) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kParse:
      return kUsage;
    case ErrorKind::kEncode:
      return kEncodeFailed;
    case ErrorKind::kDecode:
      return kDecodeFailed;
    case ErrorKind::kFormat:
      return format_code;
  }
  return kUsage;
}

void AddTableOptions(CLI::App* cmd, TableOptions& opts) {
  cmd->add_option("--table", opts.table_path, "Code table text file");
  cmd->add_flag("--builder", opts.builder,
                "Use the order-1 Builder table (default without --table)");
  cmd->add_option("--alphabet", opts.alphabet,
                  "Builder alphabet given literally");
  cmd->add_option("--from-corpus", opts.corpus_path,
                  "Builder alphabet = distinct bytes of this file");
}

// Resolves the table for encode/stats/compare. `data` supplies the default
// Builder alphabet when none is given.
CodeTable ResolveTable(const TableOptions& opts, Io& io,
                       const std::vector<std::string>& data,
                       bool* is_builder) {
  if (!opts.table_path.empty()) {
    if (opts.builder || !opts.alphabet.empty() || !opts.corpus_path.empty()) {
      throw UsageError(
          "--table cannot be combined with --builder, --alphabet or "
          "--from-corpus");
    }
    *is_builder = false;
    return TableFromText(io.Read(opts.table_path));
  }
  if (!opts.alphabet.empty() && !opts.corpus_path.empty()) {
    throw UsageError("--alphabet and --from-corpus are mutually exclusive");
  }
  *is_builder = true;
  if (!opts.alphabet.empty()) return BuildOrder1(Alphabet::FromBytes(opts.alphabet));
  if (!opts.corpus_path.empty()) {
    return BuildOrder1(Alphabet::FromBytes(io.Read(opts.corpus_path)));
  }
  std::string all;
  for (const std::string& d : data) all += d;
  return BuildOrder1(Alphabet::FromBytes(all));
}

int CmdBuild(const TableOptions& opts, int order, const std::string& out_path,
             Io& io) {
  if (order != 1) {
    throw UsageError("only order 1 tables can be built");
  }
  if (!opts.table_path.empty()) throw UsageError("build does not take --table");
  if (opts.alphabet.empty() == opts.corpus_path.empty()) {
    throw UsageError("build needs exactly one of --alphabet or --from-corpus");
  }
  Alphabet alphabet = opts.alphabet.empty()
                          ? Alphabet::FromBytes(io.Read(opts.corpus_path))
                          : Alphabet::FromBytes(opts.alphabet);
  io.Write(out_path, TableToText(BuildOrder1(alphabet)));
  return kOk;
}

int CmdEncode(const std::string& input, const TableOptions& opts,
              const std::string& out_path, Io& io) {
  std::string data = io.Read(input);
  bool is_builder = false;
  CodeTable table = ResolveTable(opts, io, {data}, &is_builder);
  std::vector<SymbolIndex> symbols = table.alphabet().ToIndices(data);
  Bits payload = Encode(table, symbols);
  std::vector<std::uint8_t> bytes = WriteContainer(
      table, is_builder ? TableMode::kBuilder : TableMode::kExplicit,
      symbols.size(), payload);
  io.Write(out_path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                      bytes.size()));
  return kOk;
}

int CmdDecode(const std::string& input, const std::string& out_path, Io& io) {
  std::string data = io.Read(input);
  Container c = ReadContainer(std::span(
      reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
  DecodeTrace trace = Decode(c.table, c.payload);
  io.Write(out_path, c.table.alphabet().ToString(trace.output));
  return kOk;
}

int CmdVerify(const std::string& path, Io& io, std::ostream& out) {
  CodeTable table = TableFromText(io.Read(path));
  const Alphabet& alphabet = table.alphabet();
  bool all_ok = true;
  for (const auto& [ctx, row] : table.rows()) {
    std::span<const Codeword> words(row);
    bool ok = IsPrefixCode(words);
    all_ok = all_ok && ok;
    out << "context " << ctx.ToString(alphabet) << ": "
        << (ok ? "ok" : "NOT PREFIX") << " {";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i].ToString();
    }
    out << "}\n";
  }
  out << "rows: " << table.rows().size() << " of "
      << CountContexts(alphabet.size(), table.order())
      << (table.IsTotal() ? " (total)" : " (partial)") << "\n";
  out << "prefix: " << (all_ok ? "true" : "false") << "\n";
  return all_ok ? kOk : kVerificationFailed;
}

int CmdAnalyze(const std::vector<std::string>& inputs,
               const TableOptions& opts, bool csv, bool single, Io& io,
               std::ostream& out) {
  if (inputs.empty()) throw UsageError("no inputs given");
  std::vector<std::string> data;
  for (const std::string& path : inputs) data.push_back(io.Read(path));
  bool is_builder = false;
  const CodeTable table = ResolveTable(opts, io, data, &is_builder);

  std::vector<std::future<AnalysisReport>> jobs;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      std::vector<SymbolIndex> w = table.alphabet().ToIndices(data[i]);
      return CompareReport(w, table, inputs[i]);
    }));
  }
  std::vector<AnalysisReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());

  if (csv) {
    out << RenderCsv(reports);
  } else if (single) {
    out << RenderReport(reports.front());
  } else {
    out << RenderCompareTable(reports);
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive (context-conditioned) prefix codes", "adcodec"};
  app.require_subcommand(1);

  TableOptions build_opts;
  int order = 1;
  std::string out_path;
  auto* build = app.add_subcommand("build", "Write the order-1 Builder table");
  build->add_option("--alphabet", build_opts.alphabet, "Alphabet literal");
  build->add_option("--from-corpus", build_opts.corpus_path,
                    "Alphabet = distinct bytes of this file");
  build->add_option("--order", order, "Table order (only 1)");
  build->add_option("--out", out_path, "Output path (default stdout)");

  TableOptions encode_opts;
  std::string encode_input;
  auto* encode = app.add_subcommand("encode", "Encode a file into a container");
  encode->add_option("input", encode_input, "Input path or -")->required();
  AddTableOptions(encode, encode_opts);
  encode->add_option("--out", out_path, "Output path (default stdout)");

  std::string decode_input;
  auto* decode = app.add_subcommand("decode", "Decode a container");
  decode->add_option("input", decode_input, "Container path or -")->required();
  decode->add_option("--out", out_path, "Output path (default stdout)");

  std::string verify_table;
  std::string verify_table_flag;
  auto* verify =
      app.add_subcommand("verify", "Check every row of a table is a prefix code");
  verify->add_option("table-file", verify_table, "Table text file");
  verify->add_option("--table", verify_table_flag, "Table text file");

  TableOptions stats_opts;
  std::string stats_input;
  bool stats_csv = false;
  auto* stats = app.add_subcommand("stats", "Pair and entropy report for one input");
  stats->add_option("input", stats_input, "Input path or -")->required();
  AddTableOptions(stats, stats_opts);
  stats->add_flag("--csv", stats_csv, "CSV output");

  TableOptions compare_opts;
  std::vector<std::string> compare_inputs;
  bool compare_csv = false;
  auto* compare =
      app.add_subcommand("compare", "Adaptive vs Huffman totals, one row per input");
  compare->add_option("inputs", compare_inputs, "Input paths");
  AddTableOptions(compare, compare_opts);
  compare->add_flag("--csv", compare_csv, "CSV output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Io io(in, out);
  int format_code = kDecodeFailed;
  try {
    if (*build) {
      return CmdBuild(build_opts, order, out_path, io);
    }
    if (*encode) {
      format_code = kEncodeFailed;
      return CmdEncode(encode_input, encode_opts, out_path, io);
    }
    if (*decode) return CmdDecode(decode_input, out_path, io);
    if (*verify) {
      if (verify_table.empty() == verify_table_flag.empty()) {
        throw UsageError("verify needs exactly one table path");
      }
      return CmdVerify(verify_table.empty() ? verify_table_flag : verify_table,
                       io, out);
    }
    if (*stats) {
      return CmdAnalyze({stats_input}, stats_opts, stats_csv, true, io, out);
    }
    if (*compare) {
      format_code = kUsage;
      return CmdAnalyze(compare_inputs, compare_opts, compare_csv, false, io,
                        out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitFor(e.kind(), format_code);
  }
  return kUsage;
}

}  // namespace adaptive::cli
