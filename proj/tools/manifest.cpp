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

#include "manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>

#include "topoinf/io.hpp"

#ifndef TOPOINF_VERSION
#define TOPOINF_VERSION "unknown"
#endif

namespace topoinf::cli {
namespace {

std::string timestamp() {
  std::time_t t = 0;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

RunManifest::RunManifest(const CLI::App& command, std::optional<std::uint64_t> seed) {
  nlohmann::json flags = nlohmann::json::object();
  for (const CLI::Option* opt : command.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      flags[name] = results.size() == 1 ? nlohmann::json(results.front())
                                        : nlohmann::json(results);
    } else {
      flags[name] = opt->get_default_str();
    }
  }
  doc_ = {{"command", command.get_name()},
          {"flags", std::move(flags)},
          {"inputs", nlohmann::json::object()},
          {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
          {"version", TOPOINF_VERSION},
          {"timestamp", timestamp()}};
}

void RunManifest::add_input(const std::string& role, const std::filesystem::path& path) {
  doc_["inputs"][role] = {{"path", path.string()}, {"sha256", sha256_hex(read_file(path))}};
}

std::string RunManifest::comment_line() const { return "# manifest: " + doc_.dump() + "\n"; }

}  // namespace topoinf::cli
