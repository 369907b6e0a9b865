#include "seqdim/sequences.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "seqdim/errors.hpp"

namespace seqdim {

std::int64_t floor_div(std::int64_t n, std::int64_t m) {
  std::int64_t q = n / m;
  if ((n % m != 0) && ((n < 0) != (m < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t n, std::int64_t m) {
  return n - floor_div(n, m) * m;
}

PeriodicSequence::PeriodicSequence(std::vector<Rational> period)
    : period_(std::move(period)) {
  if (period_.empty()) throw DomainError("periodic sequence with empty period");
}

Rational PeriodicSequence::operator()(std::int64_t n) const {
  return period_[static_cast<std::size_t>(
      floor_mod(n, static_cast<std::int64_t>(period_.size())))];
}

bool PeriodicSequence::is_identically_zero() const {
  return std::all_of(period_.begin(), period_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

PeriodicSequence PeriodicSequence::repeated(std::size_t times) const {
  std::vector<Rational> out;
  out.reserve(period_.size() * times);
  for (std::size_t k = 0; k < times; ++k) {
    out.insert(out.end(), period_.begin(), period_.end());
  }
  return PeriodicSequence(std::move(out));
}

PeriodicSequence PeriodicSequence::rotated(std::int64_t shift) const {
  std::vector<Rational> out;
  out.reserve(period_.size());
  for (std::size_t i = 0; i < period_.size(); ++i) {
    out.push_back((*this)(static_cast<std::int64_t>(i) + shift));
  }
  return PeriodicSequence(std::move(out));
}

Rational PerturbedSequence::operator()(std::int64_t n) const {
  if (auto it = exceptions.find(n); it != exceptions.end()) return it->second;
  return base(n);
}

bool PerturbedSequence::exceptions_are_vacuous() const {
  return std::all_of(exceptions.begin(), exceptions.end(),
                     [&](const auto& kv) { return base(kv.first) == kv.second; });
}

struct OracleSequence::State {
  Evaluator evaluator;
  std::string command;
  mutable std::mutex mutex;
  std::map<std::int64_t, Rational> cache;
  std::size_t evaluations = 0;
};

OracleSequence::OracleSequence(Evaluator evaluator, std::string command)
    : state_(std::make_shared<State>()) {
  state_->evaluator = std::move(evaluator);
  state_->command = std::move(command);
}

Rational OracleSequence::operator()(std::int64_t n) const {
  std::lock_guard lock(state_->mutex);
  if (auto it = state_->cache.find(n); it != state_->cache.end()) return it->second;
  if (!state_->evaluator) throw OracleError("sequence oracle is not connected");
  Rational value;
  try {
    value = state_->evaluator(n);
  } catch (const OracleError&) {
    throw;
  } catch (const std::exception& e) {
    throw OracleError("sequence oracle failed at n=" + std::to_string(n) + ": " +
                      e.what());
  }
  ++state_->evaluations;
  state_->cache.emplace(n, value);
  return value;
}

const std::string& OracleSequence::command() const { return state_->command; }

std::map<std::int64_t, Rational> OracleSequence::known_values() const {
  std::lock_guard lock(state_->mutex);
  return state_->cache;
}

std::size_t OracleSequence::evaluations() const {
  std::lock_guard lock(state_->mutex);
  return state_->evaluations;
}

struct PrefixIndicator::Scan {
  std::mutex mutex;
  std::int64_t scanned = -1;  // v(0..scanned) inspected
  std::optional<std::int64_t> failure;
};

PrefixIndicator::PrefixIndicator(OracleSequence source, PrefixTest test,
                                 bool reflected, Rational scale)
    : source_(std::move(source)),
      test_(test),
      reflected_(reflected),
      scale_(std::move(scale)),
      scan_(std::make_shared<Scan>()) {}

Rational PrefixIndicator::operator()(std::int64_t n) const {
  const std::int64_t m = reflected_ ? -n : n;
  if (m < 0) return scale_;
  std::lock_guard lock(scan_->mutex);
  while (!scan_->failure && scan_->scanned < m) {
    const std::int64_t k = scan_->scanned + 1;
    const bool zero = source_(k).is_zero();
    const bool holds = test_ == PrefixTest::AllZero ? zero : !zero;
    if (!holds) scan_->failure = k;
    scan_->scanned = k;
  }
  const bool holds = !scan_->failure || *scan_->failure > m;
  return holds ? scale_ : Rational(0);
}

std::optional<std::int64_t> PrefixIndicator::first_failure() const {
  std::lock_guard lock(scan_->mutex);
  return scan_->failure;
}

Rational InterlacedSequence::operator()(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(parts.size());
  return parts[static_cast<std::size_t>(floor_mod(n, m))](floor_div(n, m));
}

bool operator==(const InterlacedSequence& a, const InterlacedSequence& b) {
  return a.parts == b.parts;
}

Sequence::Sequence(PeriodicSequence s) : value_(std::make_shared<Variant>(std::move(s))) {}
Sequence::Sequence(PerturbedSequence s) : value_(std::make_shared<Variant>(std::move(s))) {}
Sequence::Sequence(StepSequence s) : value_(std::make_shared<Variant>(std::move(s))) {}
Sequence::Sequence(PrefixIndicator s) : value_(std::make_shared<Variant>(std::move(s))) {}
Sequence::Sequence(OracleSequence s) : value_(std::make_shared<Variant>(std::move(s))) {}
Sequence::Sequence(InterlacedSequence s) {
  if (s.parts.empty()) throw DomainError("interlacing of zero sequences");
  value_ = std::make_shared<Variant>(std::move(s));
}

Rational Sequence::operator()(std::int64_t n) const {
  return std::visit([n](const auto& s) { return s(n); }, *value_);
}

bool Sequence::is_purely_periodic() const {
  if (std::holds_alternative<PeriodicSequence>(*value_)) return true;
  if (const auto* p = std::get_if<PerturbedSequence>(value_.get())) {
    return p->exceptions_are_vacuous();
  }
  return false;
}

std::optional<PeriodicSequence> Sequence::as_periodic() const {
  if (const auto* p = std::get_if<PeriodicSequence>(value_.get())) return *p;
  if (const auto* p = std::get_if<PerturbedSequence>(value_.get())) {
    if (p->exceptions_are_vacuous()) return p->base;
  }
  return std::nullopt;
}

bool operator==(const Sequence& a, const Sequence& b) {
  if (a.value_ == b.value_) return true;
  if (a.value_->index() != b.value_->index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(*b.value_);
        if constexpr (std::is_same_v<T, OracleSequence>) {
          return x.same_source(y);
        } else {
          return x == y;
        }
      },
      *a.value_);
}

std::size_t lcm_period(std::span<const PeriodicSequence> seqs) {
  if (seqs.empty()) throw DomainError("lcm_period of an empty list");
  std::size_t l = 1;
  for (const auto& s : seqs) l = std::lcm(l, s.length());
  return l;
}

}  // namespace seqdim
