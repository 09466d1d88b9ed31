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

// External oracle over newline-delimited JSON on a child process's
// stdin/stdout. One request in flight at a time:
//
//   request:  {"id":<int>,"coords":[<float>...],"text":<string|null>}
//   response: {"id":<int>,"verdict":"safe"|"redirect"|"jailbreak"|"refuse"}

#ifndef STACKGUARD_ORACLE_ADAPTER_H_
#define STACKGUARD_ORACLE_ADAPTER_H_

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "stackguard/prompt_space.h"

namespace stackguard {

inline constexpr std::chrono::milliseconds kDefaultAdapterTimeout{5000};

// Owns the child process. A timeout or protocol error leaves the channel
// broken; later requests fail immediately.
class AdapterChannel {
 public:
  // argv[0] is resolved through PATH.
  explicit AdapterChannel(std::vector<std::string> argv);
  ~AdapterChannel();

  AdapterChannel(const AdapterChannel&) = delete;
  AdapterChannel& operator=(const AdapterChannel&) = delete;

  std::int64_t next_id() { return next_id_++; }
  bool broken() const { return broken_; }
  void mark_broken() { broken_ = true; }

  void write_line(const std::string& line);
  // Reads one '\n'-terminated line (terminator stripped). Throws
  // TimeoutError past `deadline`, ProtocolError on EOF.
  std::string read_line(std::chrono::steady_clock::time_point deadline);

 private:
  std::vector<std::string> argv_;
  int fd_ = -1;
  pid_t pid_ = -1;
  std::string buffer_;
  std::int64_t next_id_ = 1;
  bool broken_ = false;
};

// Sends one request and waits for the matching response.
Verdict adapter_classify(AdapterChannel& endpoint, const Prompt& p,
                         std::chrono::milliseconds timeout =
                             kDefaultAdapterTimeout);

// Oracle backed by an external process. Guards still apply first; guarded
// prompts never reach the process.
class AdapterOracle : public Oracle {
 public:
  AdapterOracle(std::size_t dimension, std::vector<std::string> argv,
                std::chrono::milliseconds timeout = kDefaultAdapterTimeout)
      : Oracle(dimension), channel_(std::move(argv)), timeout_(timeout) {}

 protected:
  Verdict base_verdict(const Prompt& p) override {
    return adapter_classify(channel_, p, timeout_);
  }

 private:
  AdapterChannel channel_;
  std::chrono::milliseconds timeout_;
};

}  // namespace stackguard

#endif  // STACKGUARD_ORACLE_ADAPTER_H_
