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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "entangle/states.hpp"
#include "entangle/witness.hpp"

namespace entangle {

/// Raised for unreadable, malformed or invariant-violating files.
class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateForm { Density, Pure, Witness };
std::string_view to_string(StateForm form);

/// One state (or witness) per file. JSON text with a dims header and
/// entries as [re, im] pairs printed with 17 significant digits, so a
/// write/read cycle reproduces every double bit for bit.
///
///   {
///     "format": "entangle-state/1",
///     "form": "density" | "pure" | "witness",
///     "dims": [2, 2],
///     "kind": "entanglement",        // witnesses only
///     "provenance": "...",            // optional
///     "seed": 7,                      // optional
///     "params": {"p": 0.5},           // optional
///     "matrix": [[[re, im], ...], ...]   // density / witness
///     "vector": [[re, im], ...]          // pure
///   }
struct StateFile {
  StateForm form = StateForm::Density;
  Dims dims;
  std::optional<ComplexMatrix> matrix;
  std::optional<ComplexVector> vector;
  std::optional<WitnessKind> kind;
  std::string provenance;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> params;

  static StateFile from(const DensityMatrix& rho, std::string provenance = {});
  static StateFile from(const PureState& psi, std::string provenance = {});
  static StateFile from(const WitnessOperator& w);

  /// Pure files are promoted to their projector. Throws StateFileError for
  /// witness files or invariant violations.
  DensityMatrix density() const;
  PureState pure() const;
  WitnessOperator witness() const;
};

std::string serialize(const StateFile& file);
StateFile parse_state_file(std::string_view text);

void write_state_file(const std::filesystem::path& path, const StateFile& file);
StateFile read_state_file(const std::filesystem::path& path);

}  // namespace entangle
