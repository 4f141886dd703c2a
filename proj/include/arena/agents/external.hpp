#pragma once

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <httplib.h>

#include "arena/agents/agent.hpp"
#include "arena/errors.hpp"

namespace arena::agents {

// Bounds in-flight requests per endpoint string, process-wide.
class EndpointLimiter {
 public:
  class Slot {
   public:
    explicit Slot(EndpointLimiter& l) : l_(&l) { l_->acquire(); }
    ~Slot() { l_->release(); }
    Slot(const Slot&) = delete;
    Slot& operator=(const Slot&) = delete;

   private:
    EndpointLimiter* l_;
  };

  explicit EndpointLimiter(int limit) : limit_(limit < 1 ? 1 : limit) {}

  static std::shared_ptr<EndpointLimiter> for_endpoint(const std::string& endpoint, int limit) {
    static std::mutex m;
    static std::map<std::string, std::shared_ptr<EndpointLimiter>> registry;
    std::lock_guard lock(m);
    auto& slot = registry[endpoint];
    if (!slot) slot = std::make_shared<EndpointLimiter>(limit);
    return slot;
  }

  int in_flight() const {
    std::lock_guard lock(m_);
    return busy_;
  }

 private:
  void acquire() {
    std::unique_lock lock(m_);
    cv_.wait(lock, [&] { return busy_ < limit_; });
    ++busy_;
  }
  void release() {
    {
      std::lock_guard lock(m_);
      --busy_;
    }
    cv_.notify_one();
  }

  mutable std::mutex m_;
  std::condition_variable cv_;
  int limit_;
  int busy_ = 0;
};

namespace detail {

// Runs `command` under /bin/sh with `input` on stdin and returns stdout.
// Throws AgentUnreachable on timeout, spawn failure or non-zero exit.
inline std::string run_subprocess(const std::string& command, const std::string& input, double timeout_seconds) {
  int in_pipe[2], out_pipe[2];
  if (pipe(in_pipe) != 0) throw AgentUnreachable("cannot create pipe");
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw AgentUnreachable("cannot create pipe");
  }
  const pid_t pid = fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    throw AgentUnreachable("cannot fork");
  }
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  int to_child = in_pipe[1];
  const int from_child = out_pipe[0];
  fcntl(to_child, F_SETFL, O_NONBLOCK);
  signal(SIGPIPE, SIG_IGN);

  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_seconds);
  std::size_t written = 0;
  if (input.empty()) {
    close(to_child);
    to_child = -1;
  }
  std::string output;
  bool eof = false, timed_out = false;
  while (!eof) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd fds[2] = {{from_child, POLLIN, 0}, {to_child, POLLOUT, 0}};
    const int n = poll(fds, to_child >= 0 ? 2 : 1, static_cast<int>(left.count()));
    if (n < 0 && errno == EINTR) continue;
    if (n < 0) break;
    if (to_child >= 0 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t w = write(to_child, input.data() + written, input.size() - written);
      if (w > 0) written += static_cast<std::size_t>(w);
      if (w < 0 && errno != EAGAIN) written = input.size();
      if (written >= input.size()) {
        close(to_child);
        to_child = -1;
      }
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buf[4096];
      const ssize_t r = read(from_child, buf, sizeof buf);
      if (r > 0) output.append(buf, static_cast<std::size_t>(r));
      else if (r == 0 || errno != EINTR) eof = true;
    }
  }
  if (to_child >= 0) close(to_child);
  close(from_child);
  if (timed_out) kill(pid, SIGKILL);
  int wstatus = 0;
  waitpid(pid, &wstatus, 0);
  if (timed_out) throw AgentUnreachable("no reply within " + std::to_string(timeout_seconds) + " s");
  if (!WIFEXITED(wstatus) || WEXITSTATUS(wstatus) != 0) throw AgentUnreachable("agent process failed");
  return output;
}

inline std::string http_post(const std::string& url, const std::string& body, double timeout_seconds) {
  const auto scheme_end = url.find("://");
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string base = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
  httplib::Client client(base);
  const auto secs = static_cast<time_t>(timeout_seconds);
  const auto usecs = static_cast<time_t>((timeout_seconds - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);
  auto res = client.Post(path, body, "text/plain");
  if (!res) throw AgentUnreachable("request to " + url + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw AgentUnreachable("endpoint " + url + " answered HTTP " + std::to_string(res->status));
  return res->body;
}

}  // namespace detail

// Adapter for agents outside the process: the prompt goes out as plain text
// (HTTP POST body or subprocess stdin) and the reply is the three-line form.
class ExternalAgent final : public Agent {
 public:
  ExternalAgent(AgentSpec spec, double timeout_seconds = 60.0, int concurrency = 1)
      : Agent(std::move(spec)), timeout_(timeout_seconds) {
    this->spec().validate();
    limiter_ = EndpointLimiter::for_endpoint(*this->spec().endpoint, concurrency);
  }

  std::string respond(const AgentRequest& req) override {
    const std::string& ep = *spec().endpoint;
    EndpointLimiter::Slot slot(*limiter_);
    if (ep.rfind("exec:", 0) == 0) return detail::run_subprocess(ep.substr(5), req.prompt, timeout_);
    return detail::http_post(ep, req.prompt, timeout_);
  }

 private:
  double timeout_;
  std::shared_ptr<EndpointLimiter> limiter_;
};

}  // namespace arena::agents
