#pragma once

#include <cstddef>

#include "seqdim/equations.hpp"
#include "seqdim/linalg.hpp"

namespace seqdim {

/// Constant-coefficient first-order system obtained by splitting y into the
/// block_size subsequences y_i(n) = y(block_size * n + i):
///
///     same_block * (y_0(n), ..., y_{H-1}(n))^T
///   + next_block * (y_0(n+1), ..., y_{H-1}(n+1))^T = 0
///
/// Row i is the original equation at index H*n + i. same_block is upper
/// triangular with diagonal a_0(i); next_block is nonzero only in the last
/// r rows, strictly below the anti-wrap point j = i + k - H.
struct UnfoldedSystem {
  std::size_t block_size = 0;
  RatMatrix same_block;
  RatMatrix next_block;
  std::size_t source_order = 0;
};

/// Smallest H with H > r and lcm(period lengths) | H.
/// Throws NonPeriodicCoefficients.
std::size_t choose_block_size(const DifferenceEquation& e);

/// Throws NonPeriodicCoefficients, or DomainError when H is not a valid
/// block size for `e`.
UnfoldedSystem unfold(const DifferenceEquation& e, std::size_t block_size);
UnfoldedSystem unfold(const DifferenceEquation& e);

}  // namespace seqdim
