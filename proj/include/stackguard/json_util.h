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

#ifndef STACKGUARD_JSON_UTIL_H_
#define STACKGUARD_JSON_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "nlohmann/json.hpp"

namespace stackguard {

// Parses `text`; on failure throws ParseError naming `source` and the
// 1-based line and column of the offending byte.
nlohmann::json parse_json_text(std::string_view text, std::string_view source);
nlohmann::json read_json_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
// Throws Error naming the path on any I/O failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Field accessors that throw ParseError with a dotted path, e.g.
// "run.guard.radius: expected number".
const nlohmann::json& require_field(const nlohmann::json& obj,
                                    std::string_view key,
                                    const std::string& path);
double as_number(const nlohmann::json& v, const std::string& path);
long long as_integer(const nlohmann::json& v, const std::string& path);
std::string as_string(const nlohmann::json& v, const std::string& path);
const nlohmann::json& as_array(const nlohmann::json& v,
                               const std::string& path);
const nlohmann::json& as_object(const nlohmann::json& v,
                                const std::string& path);

}  // namespace stackguard

#endif  // STACKGUARD_JSON_UTIL_H_
