#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "seqdim/rational.hpp"

namespace seqdim {

/// Floor division and mathematical modulus (result in [0, m)).
std::int64_t floor_div(std::int64_t n, std::int64_t m);
std::int64_t floor_mod(std::int64_t n, std::int64_t m);

/// s(n) = period[n mod L] for every integer n.
class PeriodicSequence {
 public:
  explicit PeriodicSequence(std::vector<Rational> period);
  static PeriodicSequence constant(Rational c) { return PeriodicSequence({std::move(c)}); }

  Rational operator()(std::int64_t n) const;
  std::size_t length() const noexcept { return period_.size(); }
  const std::vector<Rational>& period() const noexcept { return period_; }
  bool is_identically_zero() const;

  /// Same sequence, period written out `times` times.
  PeriodicSequence repeated(std::size_t times) const;
  /// n -> s(n + shift).
  PeriodicSequence rotated(std::int64_t shift) const;

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  std::vector<Rational> period_;
};

/// Periodic base with finitely many overridden values.
struct PerturbedSequence {
  PeriodicSequence base;
  std::map<std::int64_t, Rational> exceptions;

  Rational operator()(std::int64_t n) const;
  bool exceptions_are_vacuous() const;

  friend bool operator==(const PerturbedSequence&, const PerturbedSequence&) = default;
};

/// One value for n < 0 and another for n >= 0.
struct StepSequence {
  Rational negative;
  Rational nonnegative;

  Rational operator()(std::int64_t n) const { return n < 0 ? negative : nonnegative; }

  friend bool operator==(const StepSequence&, const StepSequence&) = default;
};

/// Black-box sequence n -> v(n). Every index is evaluated at most once; the
/// first answer is cached and returned for all later requests. Evaluation is
/// serialized per handle. Copies share the evaluator and the cache.
class OracleSequence {
 public:
  using Evaluator = std::function<Rational(std::int64_t)>;

  explicit OracleSequence(Evaluator evaluator, std::string command = {});

  /// Throws OracleError when the evaluator fails.
  Rational operator()(std::int64_t n) const;

  /// External command backing the sequence, empty for in-process evaluators.
  const std::string& command() const;
  std::map<std::int64_t, Rational> known_values() const;
  std::size_t evaluations() const;

  bool same_source(const OracleSequence& other) const noexcept {
    return state_ == other.state_;
  }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

enum class PrefixTest {
  AllZero,     // holds at m while v(0..m) are all zero
  AllNonzero,  // holds at m while v(0..m) are all nonzero
};

/// Step-shaped indicator driven by a prefix scan of an oracle:
///   m = reflected ? -n : n;  value = scale if m < 0 or test(v(0..m)), else 0.
class PrefixIndicator {
 public:
  PrefixIndicator(OracleSequence source, PrefixTest test, bool reflected,
                  Rational scale);

  Rational operator()(std::int64_t n) const;

  const OracleSequence& source() const noexcept { return source_; }
  PrefixTest test() const noexcept { return test_; }
  bool reflected() const noexcept { return reflected_; }
  const Rational& scale() const noexcept { return scale_; }

  /// Smallest k seen so far at which the test fails.
  std::optional<std::int64_t> first_failure() const;

  friend bool operator==(const PrefixIndicator& a, const PrefixIndicator& b) {
    return a.source_.same_source(b.source_) && a.test_ == b.test_ &&
           a.reflected_ == b.reflected_ && a.scale_ == b.scale_;
  }

 private:
  struct Scan;
  OracleSequence source_;
  PrefixTest test_;
  bool reflected_;
  Rational scale_;
  std::shared_ptr<Scan> scan_;
};

class Sequence;

/// c(m*q + j) = parts[j](q) for m = parts.size().
struct InterlacedSequence {
  std::vector<Sequence> parts;

  Rational operator()(std::int64_t n) const;

  friend bool operator==(const InterlacedSequence&, const InterlacedSequence&);
};

/// Coefficient sequence of a difference equation: an immutable, cheaply
/// copyable handle over one of the concrete representations.
class Sequence {
 public:
  using Variant = std::variant<PeriodicSequence, PerturbedSequence, StepSequence,
                               PrefixIndicator, OracleSequence, InterlacedSequence>;

  Sequence(PeriodicSequence s);    // NOLINT(google-explicit-constructor)
  Sequence(PerturbedSequence s);   // NOLINT(google-explicit-constructor)
  Sequence(StepSequence s);        // NOLINT(google-explicit-constructor)
  Sequence(PrefixIndicator s);     // NOLINT(google-explicit-constructor)
  Sequence(OracleSequence s);      // NOLINT(google-explicit-constructor)
  Sequence(InterlacedSequence s);  // NOLINT(google-explicit-constructor)

  static Sequence constant(Rational c) { return PeriodicSequence::constant(std::move(c)); }
  static Sequence zero() { return constant(0); }

  Rational operator()(std::int64_t n) const;
  const Variant& variant() const noexcept { return *value_; }

  /// Periodic, or perturbed with every exception equal to the base value.
  bool is_purely_periodic() const;
  /// The periodic form when is_purely_periodic() holds.
  std::optional<PeriodicSequence> as_periodic() const;

  friend bool operator==(const Sequence& a, const Sequence& b);

 private:
  std::shared_ptr<const Variant> value_;
};

inline Rational eval(const Sequence& s, std::int64_t n) { return s(n); }

/// lcm of the period lengths. Throws DomainError on an empty list.
std::size_t lcm_period(std::span<const PeriodicSequence> seqs);

}  // namespace seqdim
