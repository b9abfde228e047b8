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

#include "qchan/cli/spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qchan/errors.hpp"
#include "qchan/geometry.hpp"

namespace qchan::cli {

namespace {

using nlohmann::json;

// Reads typed fields from a params object and rejects leftovers.
class Fields {
 public:
  Fields(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw SpecError(path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    seen_.insert(key);
    if (!obj_.contains(key)) {
      if (fallback) return *fallback;
      throw SpecError(path_ + "." + key + ": required field missing");
    }
    const json& v = obj_.at(key);
    if (!v.is_number()) throw SpecError(path_ + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw SpecError(path_ + "." + key + ": must be finite");
    return x;
  }

  const json& value(const std::string& key) {
    seen_.insert(key);
    if (!obj_.contains(key)) throw SpecError(path_ + "." + key + ": required field missing");
    return obj_.at(key);
  }

  std::string path(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& item : obj_.items()) {
      if (!seen_.contains(item.key())) throw SpecError(path_ + "." + item.key() + ": unknown field");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

cplx parse_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw SpecError(path + ": expected a number or an [re, im] pair");
}

template <int N>
CMat<N> parse_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != N) {
    throw SpecError(path + ": expected " + std::to_string(N) + " rows");
  }
  CMat<N> m;
  for (int i = 0; i < N; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != N) {
      throw SpecError(row_path + ": expected " + std::to_string(N) + " entries");
    }
    for (int j = 0; j < N; ++j) m(i, j) = parse_complex(v[i][j], row_path + "[" + std::to_string(j) + "]");
  }
  return m;
}

PhysicalParams read_physical(Fields& f, bool with_temperature, bool with_squeezing) {
  PhysicalParams p;
  p.gamma0 = f.number("gamma0", 0.1);
  p.omega = f.number("omega", 0.01);
  p.time = f.number("t", 0.5);
  if (with_temperature) p.temperature = f.number("T", 0.0);
  if (with_squeezing) {
    p.squeeze_r = f.number("r", 0.0);
    p.squeeze_phi = f.number("phi", 0.0);
  }
  return p;
}

Channel build_qnd(Fields& f) {
  const json& modes = f.value("modes");
  if (!modes.is_array() || modes.empty()) throw SpecError(f.path("modes") + ": expected a nonempty array");
  BathModeSet bath;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    Fields m(modes[k], f.path("modes") + "[" + std::to_string(k) + "]");
    bath.modes.push_back({m.number("omega"), m.number("g"), m.number("r", 0.0), m.number("phi", 0.0)});
    m.finish();
  }
  if (f.has("beta") && f.has("T")) throw SpecError(f.path("T") + ": give either beta or T, not both");
  if (f.has("T")) {
    const double temperature = f.number("T");
    if (temperature < 0.0) throw SpecError(f.path("T") + ": must be >= 0");
    bath.beta = temperature > 0.0 ? 1.0 / temperature : std::numeric_limits<double>::infinity();
  } else {
    bath.beta = f.number("beta", 1.0);
    if (!(bath.beta > 0.0)) throw SpecError(f.path("beta") + ": must be > 0");
  }
  const double t = f.number("t", 0.5);
  const double gap = f.number("level_gap", 1.0);
  return qnd_bloch_map(qnd_dephasing(bath, t, gap));
}

std::size_t line_of(const std::string& text, std::size_t byte, std::size_t* column) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  *column = col;
  return line;
}

}  // namespace

Channel physical_channel(const std::string& family, const PhysicalParams& p) {
  const DerivedParams d = derive_params(p);
  if (family == "gad") return gad_kraus(gad_params_from_physical(d));
  return sgad_bloch_map(d);
}

ChannelSpec parse_spec(const json& doc) {
  if (!doc.is_object()) throw SpecError("spec: expected an object with \"family\" and \"params\"");
  for (const auto& item : doc.items()) {
    if (item.key() != "family" && item.key() != "params") throw SpecError(item.key() + ": unknown field");
  }
  if (!doc.contains("family") || !doc["family"].is_string()) throw SpecError("family: expected a string");

  ChannelSpec spec{doc["family"].get<std::string>(), doc.value("params", json::object()), std::nullopt,
                   Channel(BlochAffineMap::identity())};
  Fields f(spec.params, "params");
  const std::string& fam = spec.family;

  try {
    if (fam == "sgad") {
      spec.physical = read_physical(f, true, true);
    } else if (fam == "ad") {
      spec.physical = read_physical(f, false, false);
    } else if (fam == "gad") {
      if (f.has("alpha") || f.has("p") || f.has("mu") || f.has("nu")) {
        GadParams g;
        g.p_weight = f.number("p", 1.0);
        g.alpha = f.number("alpha", 0.0);
        g.mu = f.number("mu", 0.0);
        g.nu = f.number("nu", 0.0);
        g.phi = f.number("phi", 0.0);
        spec.channel = gad_kraus(g);
      } else {
        spec.physical = read_physical(f, true, false);
      }
    } else if (fam == "qnd") {
      spec.channel = build_qnd(f);
    } else if (fam == "phase_flip") {
      const double p = f.number("p");
      spec.channel = pauli_kraus({p, 0.0, 0.0, 1.0 - p, true});
    } else if (fam == "phase_damping") {
      spec.channel = phase_damping_kraus(f.number("beta"));
    } else if (fam == "depolarizing") {
      spec.channel = depolarizing_kraus(f.number("p"));
    } else if (fam == "pauli") {
      PauliWeights w;
      w.alpha = f.number("alpha");
      w.beta = f.number("beta");
      w.gamma = f.number("gamma");
      w.delta = f.number("delta", 1.0 - w.alpha - w.beta - w.gamma);
      if (std::abs(w.sum() - 1.0) > 1e-12) throw SpecError("params: Pauli weights must sum to 1");
      spec.channel = pauli_kraus(w);
    } else if (fam == "raw_kraus") {
      const json& ops = f.value("operators");
      if (!ops.is_array() || ops.empty() || ops.size() > 4) {
        throw SpecError(f.path("operators") + ": expected 1 to 4 matrices");
      }
      std::vector<Mat2> mats;
      for (std::size_t k = 0; k < ops.size(); ++k) {
        mats.push_back(parse_matrix<2>(ops[k], f.path("operators") + "[" + std::to_string(k) + "]"));
      }
      spec.channel = KrausSet::from_operators(std::move(mats));
    } else if (fam == "raw_choi") {
      const ChoiMatrix choi(parse_matrix<4>(f.value("matrix"), f.path("matrix")));
      if (!choi.is_completely_positive()) throw Error(ErrorKind::CpViolation, "matrix is not PSD");
      spec.channel = choi;
    } else {
      throw SpecError("family: unknown family \"" + fam + "\"");
    }
    f.finish();
    if (spec.physical) spec.channel = physical_channel(fam, *spec.physical);
  } catch (const Error& e) {
    throw SpecError(std::string("params: ") + e.what());
  }
  return spec;
}

ChannelSpec parse_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t column = 0;
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1, &column);
    throw SpecError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": invalid JSON");
  }
  return parse_spec(doc);
}

ChannelSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string() + ": cannot read spec file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec_text(buf.str());
  } catch (const SpecError& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
}

nlohmann::json matrix_to_json(const Mat2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json matrix_to_json(const Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qchan::cli
