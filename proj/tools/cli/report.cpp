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

#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "goqec/version.hpp"

namespace goqec::cli {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0.0";  // also folds -0.0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Keep floats recognisable as floats after a round trip.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

void write_scalar(std::ostringstream& out, const json& j) {
  if (j.is_number_float()) {
    out << format_double(j.get<double>());
  } else {
    out << j.dump();
  }
}

void write(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
      if (!first) out << ",\n";
      first = false;
      out << inner << json(key).dump() << ": ";
      write(out, value, indent + 1);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "[]";
      return;
    }
    bool flat = true;
    for (const auto& v : j) flat = flat && is_scalar(v);
    if (flat) {
      out << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        write_scalar(out, j[i]);
      }
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ",\n";
      out << inner;
      write(out, j[i], indent + 1);
    }
    out << "\n" << pad << "]";
  } else {
    write_scalar(out, j);
  }
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << ": ";
  if (is_scalar(j)) {
    if (j.is_string()) {
      out << j.get<std::string>();
    } else {
      write_scalar(out, j);
    }
  } else {
    std::ostringstream compact;
    write(compact, j, 0);
    std::string s = compact.str();
    for (auto& c : s) {
      if (c == '\n') c = ' ';
    }
    out << s;
  }
  out << "\n";
}

}  // namespace

std::string dump_deterministic(const json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

json lambda_table_to_json(const LambdaTable& table) {
  json out = json::object();
  for (const auto& [key, value] : table) {
    std::string name;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) name += ",";
      name += std::to_string(key[i]);
    }
    out[name] = json::array({value.real(), value.imag()});
  }
  return out;
}

json witness_to_json(const Witness& w) {
  return json{{"kind", w.kind}, {"indices", w.indices}, {"residual", w.residual}};
}

json make_report(const std::string& command, double tol, std::uint64_t seed) {
  return json{{"command", command},
              {"lambda_table", json::object()},
              {"max_residual", 0.0},
              {"seed", seed},
              {"sigma", nullptr},
              {"tolerance", tol},
              {"tool_version", kVersion},
              {"verdict", "ok"},
              {"witness", nullptr}};
}

std::string render_text(const json& report) {
  std::ostringstream out;
  flatten(report, "", out);
  return out.str();
}

}  // namespace goqec::cli
