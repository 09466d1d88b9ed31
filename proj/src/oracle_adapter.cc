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

#include "stackguard/oracle_adapter.h"

#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <string>
#include <thread>
#include <utility>

#include "nlohmann/json.hpp"
#include "stackguard/errors.h"

extern char** environ;

namespace stackguard {

AdapterChannel::AdapterChannel(std::vector<std::string> argv)
    : argv_(std::move(argv)) {
  if (argv_.empty()) throw Error("adapter command is empty");
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw Error(std::string("socketpair failed: ") + std::strerror(errno));
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  // dup2 clears CLOEXEC on the targets; both originals close on exec.
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, fds[1], STDOUT_FILENO);

  std::vector<char*> cargv;
  for (std::string& a : argv_) cargv.push_back(a.data());
  cargv.push_back(nullptr);
  const int rc = ::posix_spawnp(&pid_, cargv[0], &actions, nullptr,
                                cargv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(fds[1]);
  if (rc != 0) {
    ::close(fds[0]);
    throw Error("cannot start oracle adapter '" + argv_[0] +
                "': " + std::strerror(rc));
  }
  fd_ = fds[0];
}

AdapterChannel::~AdapterChannel() {
  if (fd_ >= 0) ::close(fd_);
  if (pid_ <= 0) return;
  // Closing the stream is the shutdown signal; escalate if ignored.
  for (int i = 0; i < 20; ++i) {
    if (::waitpid(pid_, nullptr, WNOHANG) == pid_) return;
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  ::kill(pid_, SIGKILL);
  ::waitpid(pid_, nullptr, 0);
}

void AdapterChannel::write_line(const std::string& line) {
  std::string data = line + "\n";
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n =
        ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      broken_ = true;
      throw ProtocolError(std::string("oracle adapter write failed: ") +
                          std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
}

std::string AdapterChannel::read_line(
    std::chrono::steady_clock::time_point deadline) {
  while (true) {
    const std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      broken_ = true;
      throw TimeoutError("oracle adapter did not respond in time");
    }
    pollfd pfd{fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      broken_ = true;
      throw ProtocolError(std::string("poll failed: ") + std::strerror(errno));
    }
    if (ready == 0) continue;  // re-check deadline
    char chunk[4096];
    const ssize_t n = ::read(fd_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      broken_ = true;
      throw ProtocolError(std::string("oracle adapter read failed: ") +
                          std::strerror(errno));
    }
    if (n == 0) {
      broken_ = true;
      throw ProtocolError("oracle adapter closed the stream");
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Verdict adapter_classify(AdapterChannel& endpoint, const Prompt& p,
                         std::chrono::milliseconds timeout) {
  if (endpoint.broken()) {
    throw ProtocolError("oracle adapter channel is broken");
  }
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  const std::int64_t id = endpoint.next_id();
  nlohmann::ordered_json request;
  request["id"] = id;
  request["coords"] = p.coords;
  request["text"] = p.text_label ? nlohmann::ordered_json(*p.text_label)
                                 : nlohmann::ordered_json(nullptr);
  endpoint.write_line(request.dump());

  const std::string line = endpoint.read_line(deadline);
  auto fail = [&](const std::string& why) -> ProtocolError {
    endpoint.mark_broken();
    return ProtocolError("oracle adapter: " + why + " (request id " +
                         std::to_string(id) + ", response '" + line + "')");
  };
  nlohmann::json response;
  try {
    response = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw fail("response is not a single JSON document");
  }
  if (!response.is_object()) throw fail("response is not an object");
  auto jid = response.find("id");
  if (jid == response.end() || !jid->is_number_integer()) {
    throw fail("response has no integer id");
  }
  if (jid->get<std::int64_t>() != id) throw fail("response id mismatch");
  auto jv = response.find("verdict");
  if (jv == response.end() || !jv->is_string()) {
    throw fail("response has no verdict string");
  }
  auto v = verdict_from_key(jv->get<std::string>());
  if (!v) throw fail("unknown verdict");
  return *v;
}

}  // namespace stackguard
