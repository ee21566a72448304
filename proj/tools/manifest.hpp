// Copyright 2026 The TopoInf Authors.
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

#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

namespace topoinf::cli {

// Provenance record attached to every output: command, resolved flags,
// input digests, seed, tool version and timestamp. The timestamp honors
// SOURCE_DATE_EPOCH so that seeded runs can be byte-identical.
class RunManifest {
 public:
  RunManifest(const CLI::App& command, std::optional<std::uint64_t> seed);

  void add_input(const std::string& role, const std::filesystem::path& path);

  const nlohmann::json& json() const noexcept { return doc_; }
  // Single-line form for '#'-comment headers.
  std::string comment_line() const;

 private:
  nlohmann::json doc_;
};

std::string sha256_hex(std::string_view data);

}  // namespace topoinf::cli
