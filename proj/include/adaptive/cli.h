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

#ifndef ADAPTIVE_CLI_H_
#define ADAPTIVE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace adaptive::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kEncodeFailed = 3,
  kDecodeFailed = 4,
};

// Runs one command line (without the program name). Data and reports go to
// `out`, diagnostics to `err`; input path "-" reads `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace adaptive::cli

#endif  // ADAPTIVE_CLI_H_
