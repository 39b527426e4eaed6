// Copyright 2026 The goqec Authors
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

#include "cli/channel_file.hpp"

#include <fstream>
#include <sstream>

namespace goqec::cli {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

SpaceDecomposition decomposition_from_json(const json& j) {
  if (!j.is_object()) throw InputError("top-level JSON value must be an object");
  try {
    return SpaceDecomposition(require_int(j, "dim_A"), require_int(j, "dim_B"),
                              require_int(j, "dim_B1"), require_int(j, "dim_perp"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void add_dims(json& j, const SpaceDecomposition& d) {
  j["dim_A"] = d.dim_a();
  j["dim_B"] = d.dim_b();
  j["dim_B1"] = d.dim_b1();
  j["dim_perp"] = d.dim_perp();
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    std::ostringstream why;
    why << where << ": expected " << rows << " rows";
    if (j.is_array()) why << ", found " << j.size();
    throw InputError(why.str());
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      std::ostringstream why;
      why << where << ": row " << i << " must have " << cols << " entries";
      if (row.is_array()) why << ", found " << row.size();
      throw InputError(why.str());
    }
    for (int k = 0; k < cols; ++k) {
      const json& entry = row[k];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        std::ostringstream why;
        why << where << ": entry (" << i << "," << k << ") must be [re, im]";
        throw InputError(why.str());
      }
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

json channel_to_json(const CPMap& channel, const SpaceDecomposition& decomp) {
  json j = json::object();
  add_dims(j, decomp);
  json kraus = json::array();
  for (const auto& op : channel.operators()) kraus.push_back(matrix_to_json(op));
  j["kraus"] = std::move(kraus);
  return j;
}

ChannelFile channel_from_json(const json& j, double tol) {
  SpaceDecomposition decomp = decomposition_from_json(j);
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty()) {
    throw InputError("\"kraus\" must be a non-empty array of matrices");
  }
  const int n = decomp.total_dim();
  std::vector<Matrix> ops;
  for (std::size_t a = 0; a < j.at("kraus").size(); ++a) {
    ops.push_back(matrix_from_json(j.at("kraus")[a], n, n,
                                   "kraus[" + std::to_string(a) + "]"));
  }
  const CPMap map(ops);
  const CptpCheck cptp = validate_cptp(map, tol);
  if (!cptp.ok) {
    std::ostringstream why;
    why << "channel is not trace preserving: residual " << cptp.residual
        << " exceeds tolerance " << tol;
    throw InputError(why.str());
  }
  return {KrausChannel::trusted(std::move(ops)), decomp};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
}

ChannelFile parse_channel_file(const std::filesystem::path& path, double tol) {
  try {
    return channel_from_json(read_json_file(path), tol);
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw InputError(path.string() + ": " + msg);
  }
}

int factor_dim(const SpaceDecomposition& decomp, Factor factor) {
  switch (factor) {
    case Factor::kA:
      return decomp.dim_a();
    case Factor::kB:
      return decomp.dim_b();
    case Factor::kB1:
      return decomp.dim_b1();
    case Factor::kH:
      return decomp.total_dim();
  }
  return 0;
}

std::string to_string(Factor factor) {
  switch (factor) {
    case Factor::kA:
      return "A";
    case Factor::kB:
      return "B";
    case Factor::kB1:
      return "B1";
    case Factor::kH:
      return "H";
  }
  return "?";
}

json state_to_json(const Matrix& m, const SpaceDecomposition& decomp, Factor factor) {
  json j = json::object();
  add_dims(j, decomp);
  j["factor"] = to_string(factor);
  j["matrix"] = matrix_to_json(m);
  return j;
}

StateFile state_from_json(const json& j) {
  SpaceDecomposition decomp = decomposition_from_json(j);
  if (!j.contains("factor") || !j.at("factor").is_string()) {
    throw InputError("missing string field \"factor\"");
  }
  const std::string name = j.at("factor").get<std::string>();
  Factor factor;
  if (name == "A") {
    factor = Factor::kA;
  } else if (name == "B") {
    factor = Factor::kB;
  } else if (name == "B1") {
    factor = Factor::kB1;
  } else if (name == "H") {
    factor = Factor::kH;
  } else {
    throw InputError("factor must be one of A, B, B1, H; got \"" + name + "\"");
  }
  if (!j.contains("matrix")) throw InputError("missing field \"matrix\"");
  const int dim = factor_dim(decomp, factor);
  Matrix m = matrix_from_json(j.at("matrix"), dim, dim, "matrix");
  return {decomp, factor, std::move(m)};
}

StateFile parse_state_file(const std::filesystem::path& path) {
  try {
    return state_from_json(read_json_file(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw InputError(path.string() + ": " + msg);
  }
}

}  // namespace goqec::cli
