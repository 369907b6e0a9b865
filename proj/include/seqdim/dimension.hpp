#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "seqdim/dimension_value.hpp"
#include "seqdim/equations.hpp"

namespace seqdim {

enum class Method { Pencil, Groebner, Both };

std::string_view to_string(Method m);
/// Throws DomainError on an unknown name.
Method parse_method(std::string_view name);

struct DimensionReport {
  Dimension dimension = Dimension::finite(0);
  std::size_t block_size = 0;
  Method method = Method::Pencil;
};

/// Dimension of the solution space of `e` in the ring of two-sided rational
/// sequences. Coefficients must be purely periodic (throws
/// NonPeriodicCoefficients otherwise). With Method::Both the two routes run
/// concurrently and any disagreement throws RouteMismatch.
DimensionReport analyze(const DifferenceEquation& e, Method method = Method::Pencil,
                        std::optional<std::size_t> block_size = std::nullopt);

inline Dimension solution_space_dimension(const DifferenceEquation& e,
                                          Method method = Method::Pencil) {
  return analyze(e, method).dimension;
}

}  // namespace seqdim
