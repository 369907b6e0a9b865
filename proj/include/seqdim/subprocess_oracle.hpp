#pragma once

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <string>

#include "seqdim/rational.hpp"
#include "seqdim/sequences.hpp"

namespace seqdim {

/// Child process answering index queries: the parent writes one decimal
/// integer per line to its stdin, the child prints exactly one rational
/// ("p" or "p/q") per line and flushes. Started lazily on the first query.
/// Not thread-safe; OracleSequence serializes access.
class SubprocessOracle {
 public:
  SubprocessOracle(std::string command, std::chrono::milliseconds timeout);
  ~SubprocessOracle();

  SubprocessOracle(const SubprocessOracle&) = delete;
  SubprocessOracle& operator=(const SubprocessOracle&) = delete;

  /// Throws OracleError on timeout, early exit or a malformed reply.
  Rational query(std::int64_t n);

  const std::string& command() const noexcept { return command_; }

 private:
  void start();
  void stop() noexcept;
  std::string read_line();

  std::string command_;
  std::chrono::milliseconds timeout_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;
  bool failed_ = false;
};

/// SEQDIM_ORACLE_TIMEOUT (seconds, may be fractional) or 10 s.
std::chrono::milliseconds default_oracle_timeout();

OracleSequence subprocess_sequence(const std::string& command,
                                   std::chrono::milliseconds timeout = default_oracle_timeout());

}  // namespace seqdim
