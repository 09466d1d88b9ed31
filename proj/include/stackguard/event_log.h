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

#ifndef STACKGUARD_EVENT_LOG_H_
#define STACKGUARD_EVENT_LOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"

namespace stackguard {

// In-memory JSONL event stream. Every line starts with "iter" and "event",
// then any context fields, then the event payload, in insertion order.
class EventLog {
 public:
  EventLog() = default;
  explicit EventLog(nlohmann::ordered_json context)
      : context_(std::move(context)) {}

  void emit(int iter, std::string_view kind,
            const nlohmann::ordered_json& payload);

  const std::vector<std::string>& lines() const { return lines_; }
  // Lines joined with '\n', with a trailing newline when non-empty.
  std::string text() const;
  void append(const EventLog& other);

 private:
  nlohmann::ordered_json context_ = nlohmann::ordered_json::object();
  std::vector<std::string> lines_;
};

inline void emit_if(EventLog* log, int iter, std::string_view kind,
                    const nlohmann::ordered_json& payload) {
  if (log != nullptr) log->emit(iter, kind, payload);
}

}  // namespace stackguard

#endif  // STACKGUARD_EVENT_LOG_H_
