#include "seqdim/pencil.hpp"

#include "seqdim/errors.hpp"

namespace seqdim {

LaurentPencil pencil_from_unfolded(const UnfoldedSystem& sys) {
  const std::size_t h = sys.block_size;
  LaurentPencil p{h, PolyMatrix(h, h), 0};
  for (std::size_t i = 0; i < h; ++i) {
    bool has_t = false;
    for (std::size_t j = 0; j < h; ++j) {
      const Rational& c1 = sys.next_block(i, j);
      p.entries(i, j) = UniPoly(std::vector<Rational>{sys.same_block(i, j), c1});
      has_t = has_t || !c1.is_zero();
    }
    if (has_t) ++p.rows_with_t;
  }
  return p;
}

UniPoly pencil_determinant(const LaurentPencil& p) {
  if (p.entries.rows() != p.entries.cols()) {
    throw DomainError("pencil determinant needs a square matrix");
  }
  return poly_det(p.entries, p.rows_with_t);
}

Dimension dimension_via_determinant(const LaurentPencil& p) {
  const UniPoly det = pencil_determinant(p);
  if (det.is_zero()) return Dimension::infinite();
  return Dimension::finite(static_cast<std::size_t>(det.degree()) - det.valuation());
}

}  // namespace seqdim
