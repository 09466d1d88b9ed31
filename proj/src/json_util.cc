// Copyright 2026 The Stackguard Authors
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

#include "stackguard/json_util.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "stackguard/errors.h"

namespace stackguard {

nlohmann::json parse_json_text(std::string_view text,
                               std::string_view source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::string_view before = text.substr(0, at);
    const std::size_t line =
        1 + std::count(before.begin(), before.end(), '\n');
    const std::size_t nl = before.rfind('\n');
    const std::size_t column =
        nl == std::string_view::npos ? at + 1 : at - nl;
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  return parse_json_text(read_text_file(path), path.string());
}

const nlohmann::json& require_field(const nlohmann::json& obj,
                                    std::string_view key,
                                    const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    throw ParseError(path + ": missing required field '" + std::string(key) +
                     "'");
  }
  return *it;
}

double as_number(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path + ": expected number");
  return v.get<double>();
}

long long as_integer(const nlohmann::json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d) return static_cast<long long>(d);
  }
  throw ParseError(path + ": expected integer");
}

std::string as_string(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path + ": expected string");
  return v.get<std::string>();
}

const nlohmann::json& as_array(const nlohmann::json& v,
                               const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected array");
  return v;
}

const nlohmann::json& as_object(const nlohmann::json& v,
                                const std::string& path) {
  if (!v.is_object()) throw ParseError(path + ": expected object");
  return v;
}

}  // namespace stackguard
