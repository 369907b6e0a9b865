#include "seqdim/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "seqdim/errors.hpp"

namespace seqdim {

namespace {

// Integer copy of a rational matrix; row i is multiplied by the lcm of its
// denominators, which is recorded in `scales`.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;
  std::vector<mpz_class> scales;

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    std::swap(scales[i], scales[k]);
  }
};

IntMatrix to_integer_rows(const RatMatrix& m) {
  IntMatrix out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols()),
                std::vector<mpz_class>(m.rows(), 1)};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : m.row(i)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.gmp().get_den_mpz_t());
    }
    out.scales[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& x = m(i, j).gmp();
      out.at(i, j) = x.get_num() * (l / x.get_den());
    }
  }
  return out;
}

struct Elimination {
  std::vector<std::size_t> pivot_cols;  // pivot_cols[k] belongs to row k
  mpz_class last_pivot = 1;
  int sign = 1;  // parity of row swaps
};

// Bareiss elimination. With `reduce_above` it is the fraction-free
// Gauss-Jordan variant: afterwards every pivot row k holds last_pivot at
// pivot_cols[k] and zeros in the other pivot columns. All divisions are
// exact because every entry is a minor of the input.
Elimination eliminate(IntMatrix& a, bool reduce_above) {
  Elimination e;
  std::size_t r = 0;
  mpz_class tmp;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) continue;
    if (p != r) {
      a.swap_rows(p, r);
      e.sign = -e.sign;
    }
    const mpz_class pivot = a.at(r, c);
    for (std::size_t i = reduce_above ? 0 : r + 1; i < a.rows; ++i) {
      if (i == r) continue;
      const mpz_class factor = a.at(i, c);
      for (std::size_t j = 0; j < a.cols; ++j) {
        if (j == c) continue;
        mpz_class& x = a.at(i, j);
        x *= pivot;
        tmp = factor * a.at(r, j);
        x -= tmp;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), e.last_pivot.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    e.pivot_cols.push_back(c);
    e.last_pivot = pivot;
    ++r;
  }
  return e;
}

}  // namespace

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
  RatMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] >= cols_) throw DomainError("column index out of range");
      out(i, k) = (*this)(i, cols[k]);
    }
  }
  return out;
}

RatVector multiply(const RatMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DomainError("dimension mismatch in multiply");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j).gmp() * v[j].gmp();
    out[i] = Rational(acc);
  }
  return out;
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix a = to_integer_rows(m);
  return eliminate(a, false).pivot_cols.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  IntMatrix a = to_integer_rows(m);
  const Elimination e = eliminate(a, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpz_class> v(m.cols(), 0);
    v[f] = e.last_pivot;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      v[e.pivot_cols[k]] = -a.at(k, f);
    }
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (v[f] < 0) g = -g;
    RatVector out;
    out.reserve(v.size());
    for (auto& x : v) out.emplace_back(mpq_class(mpz_class(x / g)));
    basis.push_back(std::move(out));
  }
  return basis;
}

std::size_t projected_kernel_dim(const RatMatrix& m,
                                 std::span<const std::size_t> coords) {
  const auto basis = kernel_basis(m);
  RatMatrix restricted(basis.size(), coords.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k] >= m.cols()) throw DomainError("coordinate out of range");
      restricted(i, k) = basis[i][coords[k]];
    }
  }
  return rank(restricted);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = to_integer_rows(m);
  const Elimination e = eliminate(a, false);
  if (e.pivot_cols.size() < n) return 0;
  mpz_class scale = 1;
  for (const auto& s : a.scales) scale *= s;
  return Rational(mpz_class(e.sign * a.at(n - 1, n - 1)), scale);
}

bool SparseEchelon::insert(Row row) {
  Row scratch;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      const Rational lead = row.front().second;
      for (auto& [col, value] : row) value /= lead;
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    // row -= row.front().value * pivot, merging the two sorted rows.
    const Rational factor = row.front().second;
    const Row& pivot = it->second;
    scratch.clear();
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        scratch.push_back(std::move(row[i++]));
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        scratch.emplace_back(pivot[j].first, -(factor * pivot[j].second));
        ++j;
      } else {
        Rational v = row[i].second - factor * pivot[j].second;
        if (!v.is_zero()) scratch.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    std::swap(row, scratch);
  }
  return false;
}

std::size_t sparse_rank(std::vector<SparseEchelon::Row> rows) {
  SparseEchelon e;
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

}  // namespace seqdim
