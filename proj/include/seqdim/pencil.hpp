#pragma once

#include <cstddef>

#include "seqdim/dimension_value.hpp"
#include "seqdim/unfolding.hpp"
#include "seqdim/unipoly.hpp"

namespace seqdim {

/// P(t) = same_block + t * next_block, read as a presentation matrix of a
/// module over the Laurent ring Q[t, 1/t]. Entries have degree <= 1.
struct LaurentPencil {
  std::size_t size = 0;
  PolyMatrix entries;
  /// Rows with at least one t term; bounds deg det P.
  std::size_t rows_with_t = 0;
};

LaurentPencil pencil_from_unfolded(const UnfoldedSystem& sys);

UniPoly pencil_determinant(const LaurentPencil& p);

/// dim_Q of the cokernel of P over Q[t, 1/t]. The ring is a PID whose units
/// are c * t^k, so the dimension is the degree of det P after stripping its
/// t-adic valuation, and infinite iff det P is identically zero.
Dimension dimension_via_determinant(const LaurentPencil& p);

}  // namespace seqdim
