#include "seqdim/subprocess_oracle.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <memory>

#include "seqdim/errors.hpp"

namespace seqdim {

namespace {

void close_fd(int& fd) noexcept {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

SubprocessOracle::SubprocessOracle(std::string command, std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {
  if (command_.empty()) throw OracleError("empty oracle command");
}

SubprocessOracle::~SubprocessOracle() { stop(); }

void SubprocessOracle::start() {
  int in_pair[2];
  int out_pipe[2];
  // A socket for the child's stdin lets writes use MSG_NOSIGNAL.
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, in_pair) != 0) {
    throw OracleError(std::string("socketpair: ") + std::strerror(errno));
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pair[0]);
    ::close(in_pair[1]);
    throw OracleError(std::string("pipe: ") + std::strerror(errno));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pair[0], in_pair[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw OracleError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    // Own process group, so shutdown also reaches whatever the shell spawned.
    ::setpgid(0, 0);
    ::dup2(in_pair[1], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(in_pair[1]);
  ::close(out_pipe[1]);
  pid_ = pid;
  to_child_ = in_pair[0];
  from_child_ = out_pipe[0];
}

void SubprocessOracle::stop() noexcept {
  close_fd(to_child_);
  close_fd(from_child_);
  if (pid_ <= 0) return;
  // Closing stdin asks a well-behaved oracle to exit; escalate if it does not.
  const auto exited_within = [this](std::chrono::milliseconds grace) {
    const auto deadline = std::chrono::steady_clock::now() + grace;
    int status = 0;
    while (::waitpid(pid_, &status, WNOHANG) == 0) {
      if (std::chrono::steady_clock::now() >= deadline) return false;
      ::usleep(2000);
    }
    return true;
  };
  bool reaped = exited_within(std::chrono::milliseconds(100));
  if (!reaped) {
    ::kill(-pid_, SIGTERM);
    reaped = exited_within(std::chrono::milliseconds(100));
  }
  ::kill(-pid_, SIGKILL);
  if (!reaped) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
  pid_ = -1;
}

std::string SubprocessOracle::read_line() {
  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  while (true) {
    if (auto nl = pending_.find('\n'); nl != std::string::npos) {
      std::string line = pending_.substr(0, nl);
      pending_.erase(0, nl + 1);
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) throw OracleError("oracle '" + command_ + "' timed out");
    pollfd pfd{from_child_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw OracleError(std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0) continue;
    char buf[4096];
    const ssize_t got = ::read(from_child_, buf, sizeof buf);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw OracleError(std::string("read: ") + std::strerror(errno));
    }
    if (got == 0) throw OracleError("oracle '" + command_ + "' closed its output");
    pending_.append(buf, static_cast<std::size_t>(got));
  }
}

Rational SubprocessOracle::query(std::int64_t n) {
  if (failed_) throw OracleError("oracle '" + command_ + "' failed earlier");
  if (pid_ < 0) start();
  try {
    const std::string request = std::to_string(n) + "\n";
    std::size_t sent = 0;
    while (sent < request.size()) {
      const ssize_t w =
          ::send(to_child_, request.data() + sent, request.size() - sent, MSG_NOSIGNAL);
      if (w < 0) {
        if (errno == EINTR) continue;
        throw OracleError("oracle '" + command_ + "' is not accepting input");
      }
      sent += static_cast<std::size_t>(w);
    }
    const std::string reply = trim(read_line());
    try {
      return Rational::parse(reply);
    } catch (const ParseError&) {
      throw OracleError("oracle '" + command_ + "' gave malformed reply '" + reply +
                        "' for n=" + std::to_string(n));
    }
  } catch (...) {
    failed_ = true;
    stop();
    throw;
  }
}

std::chrono::milliseconds default_oracle_timeout() {
  if (const char* env = std::getenv("SEQDIM_ORACLE_TIMEOUT")) {
    char* end = nullptr;
    const double seconds = std::strtod(env, &end);
    if (end != env && seconds > 0) {
      return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    }
  }
  return std::chrono::seconds(10);
}

OracleSequence subprocess_sequence(const std::string& command,
                                   std::chrono::milliseconds timeout) {
  auto process = std::make_shared<SubprocessOracle>(command, timeout);
  return OracleSequence([process](std::int64_t n) { return process->query(n); }, command);
}

}  // namespace seqdim
