#include "seqdim/unfolding.hpp"

#include "seqdim/errors.hpp"

namespace seqdim {

namespace {

std::size_t period_lcm(const std::vector<PeriodicSequence>& coeffs) {
  return lcm_period(std::span<const PeriodicSequence>(coeffs));
}

}  // namespace

std::size_t choose_block_size(const DifferenceEquation& e) {
  const std::size_t l = period_lcm(e.periodic_coefficients());
  const std::size_t need = e.order() + 1;
  return l * ((need + l - 1) / l);
}

UnfoldedSystem unfold(const DifferenceEquation& e, std::size_t block_size) {
  const auto coeffs = e.periodic_coefficients();
  const std::size_t r = e.order();
  const std::size_t h = block_size;
  const std::size_t l = period_lcm(coeffs);
  if (h <= r || h % l != 0) {
    throw DomainError("block size " + std::to_string(h) + " must exceed the order " +
                      std::to_string(r) + " and be a multiple of the period lcm " +
                      std::to_string(l));
  }
  UnfoldedSystem sys{h, RatMatrix(h, h), RatMatrix(h, h), r};
  // a_k(H*n + i) = a_k(i) because every period divides H.
  for (std::size_t i = 0; i < h; ++i) {
    const auto n = static_cast<std::int64_t>(i);
    for (std::size_t k = 0; k <= r; ++k) {
      if (i + k < h) {
        sys.same_block(i, i + k) = coeffs[k](n);
      } else {
        sys.next_block(i, i + k - h) = coeffs[k](n);
      }
    }
  }
  return sys;
}

UnfoldedSystem unfold(const DifferenceEquation& e) {
  return unfold(e, choose_block_size(e));
}

}  // namespace seqdim
