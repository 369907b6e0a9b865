#pragma once

// Reference implementations used only by tests. They are deliberately
// naive (textbook Gaussian elimination, Laplace expansion, direct index
// arithmetic) so they share no code paths with the library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "seqdim/equations.hpp"
#include "seqdim/linalg.hpp"
#include "seqdim/unipoly.hpp"

namespace seqdim::testing {

using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const RatMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  }
  return d;
}

/// Row reduction with rational pivots; returns the pivot columns.
inline std::vector<std::size_t> naive_rref(Dense& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t naive_rank(const RatMatrix& m) {
  Dense a = to_dense(m);
  return naive_rref(a, m.cols()).size();
}

/// Kernel basis read off the reduced row echelon form.
inline std::vector<std::vector<Rational>> naive_kernel(const RatMatrix& m) {
  Dense a = to_dense(m);
  const auto pivots = naive_rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t naive_projected_dim(const RatMatrix& m, const std::vector<std::size_t>& coords) {
  const auto basis = naive_kernel(m);
  if (basis.empty()) return 0;
  RatMatrix p(basis.size(), coords.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j) p(i, j) = basis[i][coords[j]];
  }
  return naive_rank(p);
}

template <class T>
T laplace_det(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(Rational(1));
  if (n == 1) return a[0][0];
  T total{};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(std::move(row));
    }
    T term = a[0][j] * laplace_det(minor);
    if (j % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  }
  return total;
}

inline Rational cofactor_det(const RatMatrix& m) { return laplace_det(to_dense(m)); }

inline UniPoly cofactor_poly_det(const PolyMatrix& m) {
  std::vector<std::vector<UniPoly>> a(m.rows(), std::vector<UniPoly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  return laplace_det(a);
}

/// A0 and A1 from the definition: the equation at index H*n + i touches
/// y(H*n + i + k) = y_{(i+k) mod H}(n + (i+k) div H).
struct NaiveUnfold {
  RatMatrix a0;
  RatMatrix a1;
};

inline NaiveUnfold naive_unfold(const DifferenceEquation& e, std::size_t h) {
  NaiveUnfold u{RatMatrix(h, h), RatMatrix(h, h)};
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t k = 0; k <= e.order(); ++k) {
      const std::size_t target = i + k;
      const Rational c = e.coefficient(k)(static_cast<std::int64_t>(i));
      if (target / h == 0) {
        u.a0(i, target % h) += c;
      } else {
        u.a1(i, target % h) += c;
      }
    }
  }
  return u;
}

inline PolyMatrix naive_pencil(const NaiveUnfold& u) {
  PolyMatrix p(u.a0.rows(), u.a0.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      p(i, j) = UniPoly(std::vector<Rational>{u.a0(i, j), u.a1(i, j)});
    }
  }
  return p;
}

/// Dimension from a determinant by the Laurent-unit rule, written out
/// independently of the library's pencil module.
inline Dimension dimension_from_det(const UniPoly& det) {
  const auto& c = det.coefficients();
  if (c.empty()) return Dimension::infinite();
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  return Dimension::finite(c.size() - 1 - low);
}

/// Brute-force dimension through the Laplace determinant of the naively
/// unfolded pencil.
inline Dimension reference_dimension(const DifferenceEquation& e, std::size_t h) {
  return dimension_from_det(cofactor_poly_det(naive_pencil(naive_unfold(e, h))));
}

struct CorpusShape {
  std::size_t max_order = 3;
  std::size_t max_period = 3;
  int coeff_lo = -2;
  int coeff_hi = 2;
  /// Force a_0(i) and a_r(i) nonzero at every residue.
  bool regular = false;
  std::size_t min_order = 0;
};

inline PeriodicSequence random_periodic(std::mt19937_64& rng, std::size_t length, int lo, int hi,
                                        bool nonzero) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> period;
  for (std::size_t i = 0; i < length; ++i) {
    int v = dist(rng);
    while (nonzero && v == 0) v = dist(rng);
    period.emplace_back(v);
  }
  return PeriodicSequence(std::move(period));
}

inline DifferenceEquation random_equation(std::mt19937_64& rng, const CorpusShape& shape) {
  std::uniform_int_distribution<std::size_t> order_dist(shape.min_order, shape.max_order);
  std::uniform_int_distribution<std::size_t> period_dist(1, shape.max_period);
  const std::size_t r = order_dist(rng);
  std::vector<Sequence> coeffs;
  for (std::size_t k = 0; k <= r; ++k) {
    const bool edge = k == 0 || k == r;
    coeffs.emplace_back(random_periodic(rng, period_dist(rng), shape.coeff_lo, shape.coeff_hi,
                                        shape.regular && edge));
  }
  return DifferenceEquation(std::move(coeffs));
}

inline std::vector<DifferenceEquation> random_corpus(std::uint64_t seed, std::size_t count,
                                                     const CorpusShape& shape = {}) {
  std::mt19937_64 rng(seed);
  std::vector<DifferenceEquation> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_equation(rng, shape));
  return out;
}

}  // namespace seqdim::testing
