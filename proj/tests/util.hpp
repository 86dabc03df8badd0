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

// Small helpers shared by the unit tests.

#ifndef PADIC_TESTS_UTIL_HPP
#define PADIC_TESTS_UTIL_HPP

#include <optional>

#include "padic/errors.hpp"

// Kind of the padic::Error thrown by fn, or nullopt when it returns.
template <class Fn>
std::optional<padic::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const padic::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

#define CHECK_KIND(expr, k) CHECK(error_kind([&] { (void)(expr); }) == std::optional(padic::ErrorKind::k))

#endif  // PADIC_TESTS_UTIL_HPP
