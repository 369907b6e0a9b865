#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqdim/dimension_value.hpp"
#include "seqdim/sequences.hpp"

namespace seqdim {

/// a_r(n) y(n+r) + ... + a_1(n) y(n+1) + a_0(n) y(n) = 0 over two-sided
/// rational sequences. The order is r = coefficients.size() - 1 and is never
/// trimmed, even when a_r is identically zero.
class DifferenceEquation {
 public:
  explicit DifferenceEquation(std::vector<Sequence> coefficients);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Sequence& coefficient(std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Sequence>& coefficients() const noexcept { return coeffs_; }

  bool is_purely_periodic() const { return !first_nonperiodic(); }
  std::optional<std::size_t> first_nonperiodic() const;
  /// Periodic forms of a_0..a_r; throws NonPeriodicCoefficients.
  std::vector<PeriodicSequence> periodic_coefficients() const;

  /// Left-hand side evaluated at index n for a sequence given on a window
  /// starting at `lo`. The window must cover [n, n + r].
  Rational residual(std::int64_t n, std::int64_t lo, std::span<const Rational> y) const;

  friend bool operator==(const DifferenceEquation&, const DifferenceEquation&) = default;

 private:
  std::vector<Sequence> coeffs_;
};

/// Constant-coefficient equation from a_0..a_r.
DifferenceEquation constant_equation(std::vector<Rational> coefficients);

/// Interlacing: solutions are exactly the y whose even subsequence solves
/// `first` and whose odd subsequence solves `second`. Orders are padded
/// with zero coefficients to the common order r; the result has order 2r.
DifferenceEquation interlace(const DifferenceEquation& first,
                             const DifferenceEquation& second);

/// m-way interlacing: y(m*q + j) ranges over solutions of parts[j].
/// The result has order m * max order.
DifferenceEquation interlace(std::span<const DifferenceEquation> parts);

/// Interlaced coefficient stream with c(m*q + j) = parts[j](q). Periodic
/// (resp. perturbed) inputs give periodic (resp. perturbed) output.
Sequence interlace_sequences(std::span<const Sequence> parts);

/// Coefficient that vanishes exactly on [0, d): 0 there, 1 elsewhere.
PerturbedSequence window_indicator(std::size_t d);

/// window_indicator(d)(n) y(n) = 0: solutions are free on [0, d) and zero
/// elsewhere.
DifferenceEquation free_window_equation(std::size_t d);

/// w(n) y(n) = 0 with w = 1 for n < 0 and 0 for n >= 0.
DifferenceEquation free_half_line_equation();

/// [n == 0] y(n) + y(n + r) = 0, whose only solution is zero. Requires r >= 1.
DifferenceEquation zero_solution_equation(std::size_t r);

/// Order-r equation, a_0 and a_r not identically zero, solution space of
/// dimension d (finite or infinite). r = 0 gives the order-0 equation.
DifferenceEquation prescribed_dimension_equation(std::size_t r, Dimension d);

/// (x - 1)^a as a constant-coefficient equation; dimension a.
DifferenceEquation binomial_equation(std::size_t a);

/// y(n+1) - w(-n) y(n) = 0 where w(m) = 1 for m < 0 or when v(0..m) are
/// all zero, and 0 otherwise. Dimension 1 when v is identically zero, else 0.
DifferenceEquation signal_equation(const OracleSequence& v);

/// Dimension b when v has no nonzero element, a otherwise (b > a).
DifferenceEquation finite_dichotomy_equation(std::size_t a, std::size_t b,
                                             const OracleSequence& v);

/// Dimension b when every v(n) is nonzero, infinite otherwise.
DifferenceEquation infinite_dichotomy_equation(std::size_t b,
                                               const OracleSequence& v);

/// Every coefficient a_i replaced by n -> a_i(n + shift). Requires purely
/// periodic coefficients.
DifferenceEquation rotate(const DifferenceEquation& e, std::int64_t shift);

}  // namespace seqdim
