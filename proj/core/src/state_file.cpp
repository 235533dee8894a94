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

#include "entangle/state_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace entangle {

namespace {

constexpr std::string_view kFormatTag = "entangle-state/1";

std::string number(double x) {
  // A bare "-0" reads back as the integer 0 and loses its sign.
  if (x == 0.0 && std::signbit(x)) return "-0.0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pair(const Complex& z) { return "[" + number(z.real()) + ", " + number(z.imag()) + "]"; }

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

StateForm parse_form(const std::string& s) {
  if (s == "density") return StateForm::Density;
  if (s == "pure") return StateForm::Pure;
  if (s == "witness") return StateForm::Witness;
  throw StateFileError("unknown form '" + s + "'");
}

Complex parse_pair(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw StateFileError("entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string_view to_string(StateForm form) {
  switch (form) {
    case StateForm::Density: return "density";
    case StateForm::Pure: return "pure";
    case StateForm::Witness: return "witness";
  }
  return "?";
}

StateFile StateFile::from(const DensityMatrix& rho, std::string provenance) {
  StateFile f;
  f.form = StateForm::Density;
  f.dims = rho.dims();
  f.matrix = rho.matrix();
  f.provenance = std::move(provenance);
  return f;
}

StateFile StateFile::from(const PureState& psi, std::string provenance) {
  StateFile f;
  f.form = StateForm::Pure;
  f.dims = psi.dims();
  f.vector = psi.vector();
  f.provenance = std::move(provenance);
  return f;
}

StateFile StateFile::from(const WitnessOperator& w) {
  StateFile f;
  f.form = StateForm::Witness;
  f.dims = w.dims();
  f.matrix = w.matrix();
  f.kind = w.kind();
  f.provenance = w.provenance();
  return f;
}

DensityMatrix StateFile::density() const {
  try {
    switch (form) {
      case StateForm::Density: return DensityMatrix(*matrix, dims);
      case StateForm::Pure: return DensityMatrix(pure());
      case StateForm::Witness: break;
    }
  } catch (const StateFileError&) {
    throw;
  } catch (const std::exception& e) {
    throw StateFileError(std::string("invalid state: ") + e.what());
  }
  throw StateFileError("expected a state file, found a witness");
}

PureState StateFile::pure() const {
  if (form != StateForm::Pure) throw StateFileError("expected a pure-state file");
  try {
    return PureState(*vector, dims);
  } catch (const std::exception& e) {
    throw StateFileError(std::string("invalid pure state: ") + e.what());
  }
}

WitnessOperator StateFile::witness() const {
  if (form != StateForm::Witness) throw StateFileError("expected a witness file");
  try {
    return WitnessOperator(*matrix, dims, kind.value_or(WitnessKind::entanglement()), provenance);
  } catch (const std::exception& e) {
    throw StateFileError(std::string("invalid witness: ") + e.what());
  }
}

std::string serialize(const StateFile& file) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": " << quoted(std::string(kFormatTag)) << ",\n";
  os << "  \"form\": " << quoted(std::string(to_string(file.form))) << ",\n";
  os << "  \"dims\": [";
  for (std::size_t i = 0; i < file.dims.size(); ++i) os << (i ? ", " : "") << file.dims[i];
  os << "],\n";
  if (file.kind) os << "  \"kind\": " << quoted(to_string(*file.kind)) << ",\n";
  if (!file.provenance.empty()) os << "  \"provenance\": " << quoted(file.provenance) << ",\n";
  if (file.seed) os << "  \"seed\": " << *file.seed << ",\n";
  if (!file.params.empty()) {
    os << "  \"params\": {";
    bool first = true;
    for (const auto& [key, value] : file.params) {
      os << (first ? "" : ", ") << quoted(key) << ": " << number(value);
      first = false;
    }
    os << "},\n";
  }
  if (file.form == StateForm::Pure) {
    const auto& v = file.vector.value();
    os << "  \"vector\": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << pair(v[i]);
    os << "]\n";
  } else {
    const auto& m = file.matrix.value();
    os << "  \"matrix\": [\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << "    [";
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << pair(m(r, c));
      os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
    }
    os << "  ]\n";
  }
  os << "}\n";
  return os.str();
}

StateFile parse_state_file(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFileError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw StateFileError("top level must be an object");

  try {
    StateFile f;
    if (j.contains("format") && j["format"].get<std::string>() != kFormatTag)
      throw StateFileError("unsupported format '" + j["format"].get<std::string>() + "'");
    f.form = parse_form(j.value("form", std::string("density")));

    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
      throw StateFileError("missing dims header");
    for (const auto& d : j["dims"]) {
      if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
        throw StateFileError("dims must be positive integers");
      f.dims.push_back(d.get<std::size_t>());
    }
    const std::size_t n = total_dimension(f.dims);

    if (j.contains("kind")) f.kind = parse_witness_kind(j["kind"].get<std::string>());
    f.provenance = j.value("provenance", std::string());
    if (j.contains("seed")) f.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("params"))
      for (const auto& [key, value] : j["params"].items()) f.params[key] = value.get<double>();

    if (f.form == StateForm::Pure) {
      if (!j.contains("vector") || !j["vector"].is_array()) throw StateFileError("missing vector");
      const auto& v = j["vector"];
      if (v.size() != n)
        throw StateFileError("vector has " + std::to_string(v.size()) + " entries, dims require " +
                             std::to_string(n));
      ComplexVector vec;
      for (const auto& z : v) vec.push_back(parse_pair(z));
      f.vector = std::move(vec);
    } else {
      if (!j.contains("matrix") || !j["matrix"].is_array()) throw StateFileError("missing matrix");
      const auto& rows = j["matrix"];
      if (rows.size() != n)
        throw StateFileError("matrix has " + std::to_string(rows.size()) + " rows, dims require " +
                             std::to_string(n));
      std::vector<Complex> entries;
      entries.reserve(n * n);
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw StateFileError("matrix must be square");
        for (const auto& z : row) entries.push_back(parse_pair(z));
      }
      f.matrix = ComplexMatrix(n, n, std::move(entries));
    }
    return f;
  } catch (const StateFileError&) {
    throw;
  } catch (const std::exception& e) {
    throw StateFileError(e.what());
  }
}

void write_state_file(const std::filesystem::path& path, const StateFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StateFileError("cannot open '" + path.string() + "' for writing");
  out << serialize(file);
  if (!out) throw StateFileError("failed writing '" + path.string() + "'");
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFileError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

}  // namespace entangle
