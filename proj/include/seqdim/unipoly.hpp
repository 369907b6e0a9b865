#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqdim/rational.hpp"

namespace seqdim {

/// Univariate polynomial over Q; coefficient k multiplies t^k. The
/// coefficient list never ends in a zero, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(Rational constant);  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(Rational c, std::size_t degree);
  static UniPoly variable() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const noexcept;

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  /// Descending powers, e.g. "t^2 - 4t - 1", "-t + 6", "0".
  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Dense square-or-rectangular matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UniPoly> data_;
};

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Determinant of a square polynomial matrix, evaluated at t = 0..degree_bound
/// and interpolated. `degree_bound` must bound deg(det).
UniPoly poly_det(const PolyMatrix& m, std::size_t degree_bound);

}  // namespace seqdim
