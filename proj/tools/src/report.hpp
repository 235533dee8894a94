// Copyright 2026 The Entangle Authors
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

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "entangle/linalg.hpp"

namespace entangle::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitEntangled = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitNonImproving = 3;
inline constexpr int kExitPptInput = 4;
inline constexpr int kExitBadInput = 64;
inline constexpr int kExitInternal = 70;

/// Fixed-precision text for report values. Twelve significant digits keeps
/// output stable across runs while staying readable.
std::string format_value(double x);
std::string format_dims(const Dims& dims);

/// Writes one KEY=VALUE line per quantity.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void put(std::string_view key, std::string_view value);
  void put(std::string_view key, double value);
  void put(std::string_view key, bool value);
  void put(std::string_view key, std::size_t value);
  void put(std::string_view key, const char* value) { put(key, std::string_view(value)); }

 private:
  std::ostream& out_;
};

}  // namespace entangle::cli
