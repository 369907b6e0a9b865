#include "seqdim/window_oracle.hpp"

#include <algorithm>

#include "seqdim/errors.hpp"
#include "seqdim/linalg.hpp"
#include "seqdim/unfolding.hpp"

namespace seqdim {

namespace {

// Rows n = -W .. W-r of the banded constraint matrix; column c is y(c - W).
std::vector<SparseEchelon::Row> constraint_rows(const DifferenceEquation& e,
                                                std::size_t radius) {
  const auto w = static_cast<std::int64_t>(radius);
  const auto r = static_cast<std::int64_t>(e.order());
  std::vector<SparseEchelon::Row> rows;
  for (std::int64_t n = -w; n <= w - r; ++n) {
    SparseEchelon::Row row;
    for (std::int64_t k = 0; k <= r; ++k) {
      Rational c = e.coefficient(static_cast<std::size_t>(k))(n);
      if (!c.is_zero()) row.emplace_back(static_cast<std::size_t>(n + k + w), std::move(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t projected_from_rows(std::vector<SparseEchelon::Row> rows, std::size_t inner,
                                std::size_t outer) {
  const std::size_t lo = outer - inner;
  const std::size_t hi = outer + inner;
  std::vector<SparseEchelon::Row> outside;
  outside.reserve(rows.size());
  for (const auto& row : rows) {
    SparseEchelon::Row kept;
    for (const auto& entry : row) {
      if (entry.first < lo || entry.first > hi) kept.push_back(entry);
    }
    outside.push_back(std::move(kept));
  }
  // |C| - rank(M) + rank(M restricted to the columns outside C).
  const std::size_t full = sparse_rank(std::move(rows));
  const std::size_t rest = sparse_rank(std::move(outside));
  return (2 * inner + 1) + rest - full;
}

}  // namespace

std::size_t window_solution_dim(const DifferenceEquation& e, std::size_t radius) {
  return 2 * radius + 1 - sparse_rank(constraint_rows(e, radius));
}

std::vector<WindowSolution> window_solutions(const DifferenceEquation& e,
                                             std::size_t radius) {
  const auto rows = constraint_rows(e, radius);
  RatMatrix m(rows.size(), 2 * radius + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [col, value] : rows[i]) m(i, col) = value;
  }
  std::vector<WindowSolution> out;
  const auto w = static_cast<std::int64_t>(radius);
  for (auto& v : kernel_basis(m)) out.push_back({-w, w, std::move(v)});
  return out;
}

std::size_t projected_dim(const DifferenceEquation& e, std::size_t inner,
                          std::size_t outer) {
  if (outer < inner) throw DomainError("outer radius must be >= inner radius");
  return projected_from_rows(constraint_rows(e, outer), inner, outer);
}

std::string_view to_string(EstimateStatus s) {
  switch (s) {
    case EstimateStatus::Stabilized:
      return "stabilized";
    case EstimateStatus::CapReached:
      return "cap_reached";
    case EstimateStatus::Growing:
      return "growing";
  }
  return "growing";
}

OracleEstimate estimate_dimension(const DifferenceEquation& e, const OracleConfig& config) {
  if (config.stall_threshold == 0) throw DomainError("stall threshold must be positive");
  std::size_t step = 4;
  if (config.outer_step) {
    step = *config.outer_step;
  } else if (e.is_purely_periodic()) {
    step = std::max<std::size_t>(4, choose_block_size(e));
  }
  if (step == 0) throw DomainError("outer step must be positive");
  const std::size_t max_steps =
      config.max_inner_steps.value_or(config.cap + config.stall_threshold + 1);

  OracleEstimate est;
  est.cap = config.cap;
  est.outer_step = step;
  std::size_t inner = config.inner_start;
  std::size_t outer_begin = inner;
  std::optional<std::size_t> previous;
  std::size_t unchanged = 0;

  for (std::size_t iteration = 0; iteration <= max_steps; ++iteration) {
    std::size_t outer = std::max(inner, outer_begin);
    std::size_t dim = projected_dim(e, inner, outer);
    est.trace.push_back({inner, outer, dim});
    std::size_t plateau_start = outer;
    for (std::size_t run = 0; run < config.stall_threshold;) {
      outer += step;
      const std::size_t next = projected_dim(e, inner, outer);
      est.trace.push_back({inner, outer, next});
      if (next == dim) {
        ++run;
      } else {
        dim = next;
        plateau_start = outer;
        run = 0;
      }
    }
    est.plateaus.push_back({inner, plateau_start, dim});
    est.inner_radius = inner;
    est.outer_radius = outer;
    est.value = std::max(est.value, dim);
    if (est.value >= config.cap) {
      est.value = config.cap;
      est.status = EstimateStatus::CapReached;
      return est;
    }
    unchanged = (previous && *previous == dim) ? unchanged + 1 : 0;
    if (unchanged >= config.stall_threshold) {
      est.status = EstimateStatus::Stabilized;
      return est;
    }
    previous = dim;
    outer_begin = plateau_start;
    inner += step;
  }
  est.status = EstimateStatus::Growing;
  return est;
}

}  // namespace seqdim
