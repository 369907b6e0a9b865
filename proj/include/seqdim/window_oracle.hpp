#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "seqdim/equations.hpp"

namespace seqdim {

/// y(lo..hi) satisfying the equation at every n with [n, n+r] inside the window.
struct WindowSolution {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<Rational> values;

  const Rational& at(std::int64_t n) const {
    return values.at(static_cast<std::size_t>(n - lo));
  }
};

/// Dimension of {y on [-W, W] : the equation holds for n in [-W, W - r]}.
std::size_t window_solution_dim(const DifferenceEquation& e, std::size_t radius);

/// Basis of the window solution space.
std::vector<WindowSolution> window_solutions(const DifferenceEquation& e,
                                             std::size_t radius);

/// Dimension of the window-[-outer, outer] solution space projected onto
/// [-inner, inner]. Nonincreasing in `outer`. Requires outer >= inner.
std::size_t projected_dim(const DifferenceEquation& e, std::size_t inner,
                          std::size_t outer);

enum class EstimateStatus { Stabilized, CapReached, Growing };

std::string_view to_string(EstimateStatus s);

struct OracleConfig {
  std::size_t inner_start = 4;
  /// Defaults to max(4, H) for periodic equations and 4 otherwise.
  std::optional<std::size_t> outer_step;
  std::size_t stall_threshold = 3;
  std::size_t cap = 64;
  /// Defaults to cap + stall_threshold + 1.
  std::optional<std::size_t> max_inner_steps;
};

struct OracleSample {
  std::size_t inner = 0;
  std::size_t outer = 0;
  std::size_t dim = 0;
};

struct OracleEstimate {
  std::size_t value = 0;
  EstimateStatus status = EstimateStatus::Growing;
  std::size_t inner_radius = 0;
  std::size_t outer_radius = 0;
  std::size_t cap = 0;
  std::size_t outer_step = 0;
  /// Stabilized projected dimension for each inner radius visited.
  std::vector<OracleSample> plateaus;
  /// Every (inner, outer) cell evaluated, in order.
  std::vector<OracleSample> trace;
};

/// Heuristic brute-force estimate: for growing inner radius W0, grow the
/// outer radius until the projected dimension is unchanged for
/// stall_threshold steps; report the largest plateau value. Stabilized
/// means the plateau itself was unchanged for stall_threshold increments of
/// W0. Not a certificate: nothing finite can be one for black-box
/// coefficients.
OracleEstimate estimate_dimension(const DifferenceEquation& e,
                                  const OracleConfig& config = {});

}  // namespace seqdim
