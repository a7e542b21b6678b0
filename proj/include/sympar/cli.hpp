// Copyright 2026 The Sympar Authors
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

#ifndef SYMPAR_CLI_HPP_
#define SYMPAR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sympar::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;        // verify or selftest reported failure
inline constexpr int kInvalidInput = 2;  // malformed JSON or invalid spec
inline constexpr int kOutOfScope = 3;    // dim Sigma = 3
inline constexpr int kUsage = 4;         // bad command line

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sympar::cli

#endif  // SYMPAR_CLI_HPP_
