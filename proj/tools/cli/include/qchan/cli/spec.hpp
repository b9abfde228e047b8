// Copyright 2026 The qchan Authors
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

// JSON channel specs: {"family": ..., "params": {...}}.

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "qchan/choi.hpp"
#include "qchan/physical.hpp"

namespace qchan::cli {

/// Malformed or out-of-range spec. what() names the offending field or the
/// line and column of a JSON syntax error.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChannelSpec {
  std::string family;
  nlohmann::json params;
  /// Set for families defined by bath parameters (sgad, ad, physical gad);
  /// these can be swept over T, r, phi and t.
  std::optional<PhysicalParams> physical;
  Channel channel;
};

/// Families: sgad, gad, ad, qnd, phase_flip, phase_damping, depolarizing,
/// pauli, raw_kraus, raw_choi. Unknown keys are rejected and every builder
/// precondition is checked here.
ChannelSpec parse_spec(const nlohmann::json& doc);
ChannelSpec parse_spec_text(const std::string& text);
ChannelSpec load_spec(const std::filesystem::path& path);

/// Channel of a physical-family spec with replaced bath parameters.
Channel physical_channel(const std::string& family, const PhysicalParams& p);

/// [re, im] pairs (or bare reals) in row-major nested arrays.
nlohmann::json matrix_to_json(const Mat2& m);
nlohmann::json matrix_to_json(const Mat4& m);

}  // namespace qchan::cli
