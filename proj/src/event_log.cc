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

#include "stackguard/event_log.h"

namespace stackguard {

void EventLog::emit(int iter, std::string_view kind,
                    const nlohmann::ordered_json& payload) {
  nlohmann::ordered_json line;
  line["iter"] = iter;
  line["event"] = kind;
  for (const auto& [k, v] : context_.items()) line[k] = v;
  for (const auto& [k, v] : payload.items()) line[k] = v;
  lines_.push_back(line.dump());
}

std::string EventLog::text() const {
  std::string out;
  for (const std::string& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

void EventLog::append(const EventLog& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

}  // namespace stackguard
