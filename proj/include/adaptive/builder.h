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

#ifndef ADAPTIVE_BUILDER_H_
#define ADAPTIVE_BUILDER_H_

#include "adaptive/core.h"

namespace adaptive {

// Builds the total order-1 binary table over `alphabet` whose repeated
// symbols cost one bit.
//
// With h = alphabet.size() and X the balanced canonical Huffman code over
// symbols 2..h (all frequencies zero):
//   c(s_i, s_i)  = 0
//   c(s_1, s_i)  = 1.X(i)           for i >= 2
//   c(s_i, ctx)  = 1.X(i)           for i >= 2 and any context ctx != s_i
//   c(s_i, ~)    = c(s_1, s_i)      (so c(s_1, ~) = 0)
// where s_1 is the first alphabet symbol. When h = 2 the single-symbol code
// X carries no bits, so the off-diagonal codeword is just "1".
//
// Every row is a complete prefix code. Throws kInvalidArgument if h < 2.
CodeTable BuildOrder1(const Alphabet& alphabet);

}  // namespace adaptive

#endif  // ADAPTIVE_BUILDER_H_
