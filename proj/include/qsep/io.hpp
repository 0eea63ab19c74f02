/* Copyright 2026 The qsep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// State files and reports.
//
// A state file is one JSON object:
//
//   {"name": "ghz", "dims": [2, 2, 2], "amplitudes": [[re, im], ...]}
//
// with amplitudes in big-endian mixed-radix order (party 1 most
// significant). `name` is optional. Output floats carry 17 significant
// digits so every double round-trips exactly.

#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsep/errors.hpp"
#include "qsep/linalg.hpp"
#include "qsep/state.hpp"

namespace qsep::io {

using json = nlohmann::ordered_json;

struct StateFile {
  std::optional<std::string> name;
  Dims dims;
  std::vector<complex> amplitudes;
};

inline StateFile parse_state_file(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw invalid_state_error(std::string("malformed state file: ") + e.what());
  }
  if (!doc.is_object()) throw invalid_state_error("state file must be a JSON object");

  StateFile file;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw invalid_state_error("\"name\" must be a string");
    file.name = it->get<std::string>();
  }

  auto dims = doc.find("dims");
  if (dims == doc.end() || !dims->is_array() || dims->empty()) {
    throw invalid_state_error("\"dims\" must be a non-empty integer array");
  }
  for (const auto& d : *dims) {
    if (!d.is_number_unsigned()) throw invalid_state_error("\"dims\" entries must be positive integers");
    const auto v = d.get<std::uint64_t>();
    if (v < 2) throw invalid_state_error("\"dims\" entries must be at least 2");
    if (v > kMaxAmplitudes) throw size_cap_error("party dimension above the size cap");
    file.dims.push_back(static_cast<std::size_t>(v));
  }
  check_size_cap(file.dims);

  auto amps = doc.find("amplitudes");
  if (amps == doc.end() || !amps->is_array()) {
    throw invalid_state_error("\"amplitudes\" must be an array of [re, im] pairs");
  }
  if (amps->size() != total_size(file.dims)) {
    throw invalid_state_error("expected " + std::to_string(total_size(file.dims)) +
                              " amplitudes, got " + std::to_string(amps->size()));
  }
  file.amplitudes.reserve(amps->size());
  for (const auto& pair : *amps) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw invalid_state_error("each amplitude must be a [re, im] number pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw invalid_state_error("amplitudes must be finite");
    }
    file.amplitudes.emplace_back(re, im);
  }
  return file;
}

inline PureState to_state(const StateFile& file, Normalization policy,
                          double norm_tol = kDefaultNormTol) {
  return PureState(file.dims, file.amplitudes, policy, norm_tol);
}

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Compact JSON with floats at 17 significant digits.
inline void write_json(std::ostream& out, const json& value) {
  switch (value.type()) {
    case json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out << ',';
        first = false;
        out << json(key).dump() << ':';
        write_json(out, item);
      }
      out << '}';
      break;
    }
    case json::value_t::array: {
      out << '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out << ',';
        first = false;
        write_json(out, item);
      }
      out << ']';
      break;
    }
    case json::value_t::number_float:
      out << format_double(value.get<double>());
      break;
    default:
      out << value.dump();
  }
}

inline std::string to_json_string(const json& value) {
  std::ostringstream os;
  write_json(os, value);
  return os.str();
}

inline json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

inline json vector_json(std::span<const complex> v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(complex_json(z));
  return arr;
}

inline json state_file_json(const PureState& state, const std::optional<std::string>& name) {
  json doc = json::object();
  if (name) doc["name"] = *name;
  doc["dims"] = state.dims();
  doc["amplitudes"] = vector_json(state.amplitudes());
  return doc;
}

inline void write_state_file(std::ostream& out, const PureState& state,
                             const std::optional<std::string>& name = std::nullopt) {
  write_json(out, state_file_json(state, name));
  out << '\n';
}

}  // namespace qsep::io
