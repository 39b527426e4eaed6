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

// Channel and state files.
//
// A channel file is a JSON object
//
//   {"dim_A": 2, "dim_B": 2, "dim_B1": 1, "dim_perp": 0,
//    "kraus": [M0, M1, ...]}
//
// where every matrix is a row-major list of rows and each complex entry is a
// two-element [re, im] array. A state file carries the same dimension fields
// plus "factor" ("A", "B", "B1" or "H") and a single "matrix".

#ifndef GOQEC_TOOLS_CHANNEL_FILE_HPP_
#define GOQEC_TOOLS_CHANNEL_FILE_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "goqec/channels.hpp"
#include "goqec/hilbert.hpp"

namespace goqec::cli {

/// A file that cannot be checked at all. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChannelFile {
  KrausChannel channel;
  SpaceDecomposition decomp;
};

enum class Factor { kA, kB, kB1, kH };

struct StateFile {
  SpaceDecomposition decomp;
  Factor factor;
  Matrix matrix;
};

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols,
                        const std::string& where);

nlohmann::json channel_to_json(const CPMap& channel, const SpaceDecomposition& decomp);

/// Validates the file shape, then trace preservation at `tol`.
ChannelFile channel_from_json(const nlohmann::json& j, double tol);
ChannelFile parse_channel_file(const std::filesystem::path& path, double tol);

nlohmann::json state_to_json(const Matrix& m, const SpaceDecomposition& decomp,
                             Factor factor);
StateFile state_from_json(const nlohmann::json& j);
StateFile parse_state_file(const std::filesystem::path& path);

int factor_dim(const SpaceDecomposition& decomp, Factor factor);
std::string to_string(Factor factor);

/// Reads and parses a JSON document; syntax errors become InputError.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace goqec::cli

#endif  // GOQEC_TOOLS_CHANNEL_FILE_HPP_
