#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace seqdim {

/// Dimension of a solution space: a nonnegative integer or infinity.
class Dimension {
 public:
  static Dimension finite(std::size_t k) { return Dimension(k); }
  static Dimension infinite() { return Dimension(); }

  bool is_infinite() const noexcept { return !value_; }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  std::size_t value() const { return *value_; }

  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("infinite");
  }

  /// Infinity absorbs.
  friend Dimension operator+(const Dimension& a, const Dimension& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return finite(*a.value_ + *b.value_);
  }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Dimension() = default;
  explicit Dimension(std::size_t k) : value_(k) {}
  std::optional<std::size_t> value_;
};

inline std::ostream& operator<<(std::ostream& os, const Dimension& d) {
  return os << d.to_string();
}

}  // namespace seqdim
