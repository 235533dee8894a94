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

#include "report.hpp"

#include <cstdio>

namespace entangle::cli {

std::string format_value(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_dims(const Dims& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

void Report::put(std::string_view key, std::string_view value) { out_ << key << '=' << value << '\n'; }
void Report::put(std::string_view key, double value) { put(key, std::string_view(format_value(value))); }
void Report::put(std::string_view key, bool value) { put(key, std::string_view(value ? "true" : "false")); }
void Report::put(std::string_view key, std::size_t value) { put(key, std::string_view(std::to_string(value))); }

}  // namespace entangle::cli
