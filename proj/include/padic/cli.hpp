// Copyright 2026 The padic-dynamics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADIC_CLI_HPP
#define PADIC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "padic/errors.hpp"

namespace padic::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // an identity or existence claim does not hold
inline constexpr int kBadInput = 2;
inline constexpr int kPrecision = 3;  // precision or truncation ran out

int exit_code(ErrorKind kind);

// args[0] is the program name.  Result JSON goes to `out` (or --out), a
// one-line summary or diagnostic to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli

#endif  // PADIC_CLI_HPP
